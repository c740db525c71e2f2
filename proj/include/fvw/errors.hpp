#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fvw {

struct division_by_zero : std::runtime_error {
    explicit division_by_zero(const std::string& what) : std::runtime_error(what) {}
};

struct domain_mismatch : std::runtime_error {
    explicit domain_mismatch(const std::string& what) : std::runtime_error(what) {}
};

struct unbound_generator : std::runtime_error {
    explicit unbound_generator(const std::string& what) : std::runtime_error(what) {}
};

struct missing_inner_data : std::runtime_error {
    explicit missing_inner_data(const std::string& what) : std::runtime_error(what) {}
};

struct invalid_action_kernel : std::runtime_error {
    explicit invalid_action_kernel(const std::string& what) : std::runtime_error(what) {}
};

struct no_solution : std::runtime_error {
    explicit no_solution(const std::string& what) : std::runtime_error(what) {}
};

struct parse_error : std::runtime_error {
    std::size_t pos;
    parse_error(const std::string& what, std::size_t at)
        : std::runtime_error(what + " (at position " + std::to_string(at) + ")"), pos(at) {}
};

} // namespace fvw

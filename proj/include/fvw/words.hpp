#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace fvw {

// word in a free monoid over indexed generators x1, x2, ...; empty = identity
struct MonoidWord {
    std::vector<std::uint32_t> idx;

    MonoidWord() = default;
    explicit MonoidWord(std::vector<std::uint32_t> i) : idx(std::move(i)) {}
    static MonoidWord one() { return {}; }
    static MonoidWord gen(std::uint32_t i) { return MonoidWord({i}); }

    std::size_t length() const { return idx.size(); }
    bool empty() const { return idx.empty(); }

    friend MonoidWord operator*(const MonoidWord& u, const MonoidWord& v);
    friend bool operator==(const MonoidWord& u, const MonoidWord& v) { return u.idx == v.idx; }

    MonoidWord reversed() const;
    MonoidWord substitute(const std::map<std::uint32_t, MonoidWord>& images) const;

    std::string str() const; // "x1*x2*x1", "e"
};

// degree-lexicographic order; canonical printing and map keys
struct DegLexLess {
    bool operator()(const MonoidWord& u, const MonoidWord& v) const {
        if (u.length() != v.length()) return u.length() < v.length();
        return u.idx < v.idx;
    }
};

struct GroupLetter {
    std::uint32_t gen;
    int sign; // +1 or -1
    friend bool operator==(const GroupLetter& a, const GroupLetter& b) = default;
    friend auto operator<=>(const GroupLetter& a, const GroupLetter& b) = default;
};

// freely reduced word in a free group
class GroupWord {
  public:
    GroupWord() = default;
    static GroupWord one() { return {}; }
    static GroupWord gen(std::uint32_t i, int sign = 1);
    // reduces the sequence
    static GroupWord from_letters(std::vector<GroupLetter> ls);

    const std::vector<GroupLetter>& letters() const { return ls_; }
    std::size_t length() const { return ls_.size(); }
    bool is_identity() const { return ls_.empty(); }

    friend GroupWord operator*(const GroupWord& u, const GroupWord& v);
    friend bool operator==(const GroupWord& u, const GroupWord& v) { return u.ls_ == v.ls_; }
    friend bool operator<(const GroupWord& u, const GroupWord& v) {
        if (u.length() != v.length()) return u.length() < v.length();
        return u.ls_ < v.ls_;
    }

    GroupWord inverse() const;
    // letters in reverse order, signs unchanged (the bar map)
    GroupWord reversed() const;
    GroupWord pow(long long n) const;
    GroupWord substitute(const std::map<std::uint32_t, GroupWord>& images) const;

    std::string str() const; // "x1*x2^-1", "e"

  private:
    std::vector<GroupLetter> ls_;
};

// one-pass free reduction; exposed so tests can cross-check against
// randomized single-step reduction orders
std::vector<GroupLetter> free_reduce(std::vector<GroupLetter> ls);

} // namespace fvw

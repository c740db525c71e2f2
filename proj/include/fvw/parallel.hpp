#pragma once

#include <optional>
#include <vector>

#include "fvw/report.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace fvw {

// Runs `fn(i)` for i in [0, n). Cases are independent and carry their own
// per-index seeds, so the OpenMP path must produce the same failure list as
// the serial reference; tests assert that.
template <class F>
void for_each_case(int n, bool parallel, F&& fn) {
#if defined(_OPENMP)
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
#else
    (void)parallel;
#endif
    for (int i = 0; i < n; ++i) fn(i);
}

// per-index failure slots; merge is index-ordered regardless of scheduling
class CaseCollector {
  public:
    explicit CaseCollector(int n) : slots_(static_cast<std::size_t>(n)) {}

    void fail(int index, CheckFailure f) {
        f.case_index = index;
        slots_[static_cast<std::size_t>(index)] = std::move(f);
    }

    void drain_into(Report& r) const {
        for (const auto& s : slots_)
            if (s) r.failures.push_back(*s);
    }

  private:
    std::vector<std::optional<CheckFailure>> slots_;
};

inline int hardware_threads() {
#if defined(_OPENMP)
    return omp_get_max_threads();
#else
    return 1;
#endif
}

} // namespace fvw

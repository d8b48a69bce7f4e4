#ifndef QTRACE_GUARDS_HPP
#define QTRACE_GUARDS_HPP

#include <cstdlib>
#include <string>

#include "qtrace/errors.hpp"

namespace qtrace {

// Exhaustive tables over S_n grow factorially; each entry point carries a
// default bound. KERNEL_MAX_N raises (or lowers) all of them at once.
inline int guard_override() {
    static const int value = [] {
        const char* env = std::getenv("KERNEL_MAX_N");
        if (!env) return -1;
        return std::atoi(env);
    }();
    return value;
}

inline void check_guard(int n, int default_guard, const char* what) {
    const int limit = guard_override() > 0 ? guard_override() : default_guard;
    if (n < 0 || n > limit) {
        throw guard_error(std::string(what) + ": n = " + std::to_string(n) +
                          " exceeds guard " + std::to_string(limit) +
                          " (set KERNEL_MAX_N to override)");
    }
}

} // namespace qtrace

#endif

#ifndef QTRACE_ERRORS_HPP
#define QTRACE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qtrace {

// Base class for everything thrown by the kernel.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Division by a zero rational function.
struct division_by_zero : error {
    division_by_zero() : error("division by zero") {}
    explicit division_by_zero(const std::string& what) : error(what) {}
};

// Evaluation at v = 1 of a rational function whose denominator vanishes there.
struct pole_error : error {
    explicit pole_error(const std::string& what) : error(what) {}
};

// Operands index different symmetric groups / alphabets.
struct size_mismatch : error {
    explicit size_mismatch(const std::string& what) : error(what) {}
};

// n exceeds a guard bound (override with KERNEL_MAX_N, unsafe).
struct guard_error : error {
    explicit guard_error(const std::string& what) : error(what) {}
};

// Malformed user input: parse failures, rejected patterns, bad supports.
struct input_error : error {
    explicit input_error(const std::string& what) : error(what) {}
};

// An internal invariant failed; the computation cannot be trusted.
struct invariant_violation : error {
    explicit invariant_violation(const std::string& what) : error(what) {}
};

} // namespace qtrace

#endif

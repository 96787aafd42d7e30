#pragma once

#include <stdexcept>
#include <string>

namespace iqinv {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// bad arguments: zero denominators, illegal generators, malformed tuples
struct DomainError : Error {
    using Error::Error;
};

// evaluation at q = 1 hit a vanishing denominator
struct PoleError : Error {
    using Error::Error;
};

// enumeration caps (weyl_b, sym_group, u_element)
struct CapExceeded : Error {
    using Error::Error;
};

// a space would exceed the configured basis budget
struct BudgetExceeded : Error {
    using Error::Error;
};

}  // namespace iqinv

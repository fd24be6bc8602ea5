#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace mstruct {

// Exact integer arithmetic everywhere; torsion computations cannot tolerate
// overflow or modular shortcuts.
using Int = boost::multiprecision::cpp_int;

inline Int gcd(const Int& a, const Int& b)
{
    return boost::multiprecision::gcd(a, b);
}

inline Int abs(const Int& a)
{
    return boost::multiprecision::abs(a);
}

inline std::string to_string(const Int& a)
{
    return a.str();
}

}  // namespace mstruct

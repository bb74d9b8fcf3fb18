#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace gjc {

// Exact arbitrary-precision integer used for every coefficient and count.
using BigInt = boost::multiprecision::cpp_int;

// Two operands were built over different alphabets.
class AlphabetMismatchError : public std::invalid_argument {
public:
    explicit AlphabetMismatchError(const std::string& what)
        : std::invalid_argument(what) {}
};

// An enumeration guard was exceeded (the computation would materialize too
// many words/clusters/lattice elements for a desk-scale run).
class LimitError : public std::runtime_error {
public:
    explicit LimitError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gjc

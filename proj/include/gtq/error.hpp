#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace gtq {

// Base for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input: bad JSON, bad indices, rank mismatches, violated preconditions.
class InputError : public Error {
public:
    using Error::Error;
};

// A window fails strong genericity: some product scalar vanishes.
class NonGenericWindow : public Error {
public:
    struct Site {
        int vertex;  // window vertex index where the pair starts
        int m;
        int i;
        std::string point;  // spectral point -l_mi as "p/q"
    };

    NonGenericWindow(const std::string& msg, std::vector<Site> sites)
        : Error(msg), sites(std::move(sites)) {}

    std::vector<Site> sites;
};

// Constraint propagation produced a contradiction; indicates an internal bug.
class InconsistentConstraints : public Error {
public:
    using Error::Error;
};

// reduce_cycle could not bring any cancelling pair together.
class IrreducibleWord : public Error {
public:
    using Error::Error;
};

}  // namespace gtq

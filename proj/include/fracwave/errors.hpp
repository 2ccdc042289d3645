#pragma once

#include <stdexcept>
#include <string>

namespace fracwave {

/// A factorization met a pivot too small to continue; block_index names the offending block.
class SingularMatrixError : public std::runtime_error {
public:
    SingularMatrixError(const std::string& what, int block_index)
        : std::runtime_error(what), block_index_(block_index)
    {}

    int block_index() const { return block_index_; }

private:
    int block_index_;
};

/// A problem function returned a non-finite value during assembly.
class AssemblyError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace fracwave

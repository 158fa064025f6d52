#ifndef SNC_ERROR_HPP
#define SNC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace snc
{

/// Input violates a documented invariant. The message names the offending object.
class ValidationError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

/// A matrix does not carry the relations of its source into those of its target.
class WellDefinednessError : public ValidationError
{
public:
    using ValidationError::ValidationError;
};

} // namespace snc

#endif

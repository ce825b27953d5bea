#ifndef LOVASZ_ERROR_HPP
#define LOVASZ_ERROR_HPP

#include <stdexcept>
#include <string>

namespace lovasz {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error
{
    public:
        using std::runtime_error::runtime_error;
};

/// Invalid construction input (out-of-range index, loop, duplicate edge, ...).
class InvalidInput : public Error
{
    public:
        using Error::Error;
};

/// An operation was called on input that does not meet its documented
/// precondition.
class PreconditionError : public Error
{
    public:
        using Error::Error;
};

/**
 * A named hypothesis of a construction failed, e.g. "bipartite" or
 * "non-facial 4-cycle". The name is stable and appears in reports.
 */
class HypothesisError : public PreconditionError
{
    public:
        HypothesisError(std::string hypothesis, const std::string& detail)
            : PreconditionError(hypothesis + ": " + detail),
              hypothesis_(std::move(hypothesis))
        {
        }

        const std::string& hypothesis() const noexcept { return hypothesis_; }

    private:
        std::string hypothesis_;
};

/// Malformed file content. `where` is a human-readable position.
class ParseError : public Error
{
    public:
        ParseError(std::string where, const std::string& what)
            : Error(where + ": " + what), where_(std::move(where))
        {
        }

        const std::string& where() const noexcept { return where_; }

    private:
        std::string where_;
};

}   // namespace lovasz

#endif

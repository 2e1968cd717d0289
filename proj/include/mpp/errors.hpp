#ifndef MPP_ERRORS_HPP
#define MPP_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mpp {

/** Malformed or invalid user input (files, markings, parameters). */
class InputError : public std::runtime_error
{
    public:
        explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public InputError
{
    public:
        explicit ParseError(const std::string& what) : InputError(what) {}
};

/** Base class of failures raised by the computational kernels. */
class ComputationError : public std::runtime_error
{
    public:
        explicit ComputationError(const std::string& what) : std::runtime_error(what) {}
};

class EmptyPolyhedron : public ComputationError
{
    public:
        explicit EmptyPolyhedron(const std::string& what = "polyhedron is empty")
            : ComputationError(what) {}
};

class Unbounded : public ComputationError
{
    public:
        explicit Unbounded(const std::string& what = "polyhedron is unbounded")
            : ComputationError(what) {}
};

class UnsupportedUnbounded : public ComputationError
{
    public:
        explicit UnsupportedUnbounded(const std::string& what = "operation requires a bounded polytope")
            : ComputationError(what) {}
};

/** Raised when a polyhedron contains a line; vertex enumeration needs a pointed polyhedron. */
class NotPointed : public ComputationError
{
    public:
        explicit NotPointed(const std::string& what = "polyhedron contains a line")
            : ComputationError(what) {}
};

class NonLatticeVertices : public ComputationError
{
    public:
        explicit NonLatticeVertices(const std::string& what = "polytope has a non-integral vertex")
            : ComputationError(what) {}
};

class SingularMap : public ComputationError
{
    public:
        explicit SingularMap(const std::string& what = "affine map is not invertible")
            : ComputationError(what) {}
};

class TooLarge : public ComputationError
{
    public:
        explicit TooLarge(const std::string& what) : ComputationError(what) {}
};

class NonInteriorParameter : public ComputationError
{
    public:
        explicit NonInteriorParameter(const std::string& what = "parameter is not in the open unit cube")
            : ComputationError(what) {}
};

}  // namespace mpp

#endif

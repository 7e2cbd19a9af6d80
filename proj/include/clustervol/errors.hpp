#pragma once

#include <stdexcept>
#include <string>

namespace clustervol {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A mutation divided by a vanishing cluster variable.
class DegenerateSeed : public Error {
public:
    DegenerateSeed(int index, const std::string& what)
        : Error(what), index_(index) {}
    /// 1-based index of the vanishing variable (or of the failing step, see `step()`).
    int index() const noexcept { return index_; }
    int step() const noexcept { return step_; }
    void set_step(int step) noexcept { step_ = step; }

private:
    int index_;
    int step_ = 0;
};

/// A y-mutation hit y_k = 0 or y_k = -1, or an R-action denominator vanished.
class SingularY : public Error {
public:
    SingularY(int index, const std::string& what) : Error(what), index_(index) {}
    int index() const noexcept { return index_; }

private:
    int index_;
};

class ParseError : public Error {
public:
    ParseError(int position, const std::string& what)
        : Error(what), position_(position) {}
    /// 1-based token position of the offending token.
    int position() const noexcept { return position_; }

private:
    int position_;
};

/// The braid closure has more than one component.
class MultiComponent : public Error {
public:
    MultiComponent(int components, const std::string& what)
        : Error(what), components_(components) {}
    int components() const noexcept { return components_; }

private:
    int components_;
};

/// A tetrahedron modulus is 0, 1 or not finite.
class DegenerateModulus : public Error {
public:
    using Error::Error;
    int crossing = 0;
};

/// The log ledger does not produce integral p, q, or the two ledgers disagree.
class FlatteningError : public Error {
public:
    FlatteningError(double residual, const std::string& what)
        : Error(what), residual_(residual) {}
    double residual() const noexcept { return residual_; }
    int crossing = 0;

private:
    double residual_;
};

}  // namespace clustervol

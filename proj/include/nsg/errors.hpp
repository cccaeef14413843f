#pragma once

#include <stdexcept>
#include <string>

namespace nsg {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// semigroup construction
struct EmptyError : Error {
    explicit EmptyError(const std::string& w) : Error(w) {}
};
struct GcdError : Error {
    explicit GcdError(const std::string& w) : Error(w) {}
};
struct NotMemberError : Error {
    explicit NotMemberError(const std::string& w) : Error(w) {}
};
struct WholeSemigroupError : Error {
    explicit WholeSemigroupError(const std::string& w) : Error(w) {}
};

// relative-ideal arithmetic
struct BaseMismatchError : Error {
    explicit BaseMismatchError(const std::string& w) : Error(w) {}
};
struct NotContainedError : Error {
    explicit NotContainedError(const std::string& w) : Error(w) {}
};

// classification
struct NotGotoError : Error {
    explicit NotGotoError(const std::string& w) : Error(w) {}
};
struct ZeroRankError : Error {
    explicit ZeroRankError(const std::string& w) : Error(w) {}
};
struct DecompositionUnavailable : Error {
    explicit DecompositionUnavailable(const std::string& w) : Error(w) {}
};

// three-generated structure data
struct GorensteinError : Error {
    explicit GorensteinError(const std::string& w) : Error(w) {}
};
struct NotThreeGeneratedError : Error {
    explicit NotThreeGeneratedError(const std::string& w) : Error(w) {}
};
struct ParamError : Error {
    explicit ParamError(const std::string& w) : Error(w) {}
};

// constructions
struct ExtensionError : Error {
    explicit ExtensionError(const std::string& w) : Error(w) {}
};
struct PreconditionError : Error {
    explicit PreconditionError(const std::string& w) : Error(w) {}
};

// census output
struct IoError : Error {
    explicit IoError(const std::string& w) : Error(w) {}
};

}  // namespace nsg

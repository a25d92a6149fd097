#pragma once

#include <stdexcept>
#include <string>

namespace gramq {

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

class DimensionError : public Error {
public:
    explicit DimensionError(const std::string& msg) : Error(msg) {}
};

class IndexError : public Error {
public:
    explicit IndexError(const std::string& msg) : Error(msg) {}
};

class InvalidInputError : public Error {
public:
    explicit InvalidInputError(const std::string& msg) : Error(msg) {}
};

class NotConnectedError : public Error {
public:
    explicit NotConnectedError(const std::string& msg) : Error(msg) {}
};

class InvalidWalkError : public Error {
public:
    explicit InvalidWalkError(const std::string& msg) : Error(msg) {}
};

// Flation / FS-transformation applied where |q_ij| > 1: result is not a unit form.
class NonUnitResultError : public Error {
public:
    explicit NonUnitResultError(const std::string& msg) : Error(msg) {}
};

// The eps of a flation step disagrees with the sign of the coupling it acts on.
class WrongSignError : public Error {
public:
    explicit WrongSignError(const std::string& msg) : Error(msg) {}
};

class ParallelArrowsError : public Error {
public:
    explicit ParallelArrowsError(const std::string& msg) : Error(msg) {}
};

class NotATreeError : public Error {
public:
    explicit NotATreeError(const std::string& msg) : Error(msg) {}
};

class NotAStarError : public Error {
public:
    explicit NotAStarError(const std::string& msg) : Error(msg) {}
};

class NotAOneTreeError : public Error {
public:
    explicit NotAOneTreeError(const std::string& msg) : Error(msg) {}
};

class NotAOneStarError : public Error {
public:
    explicit NotAOneStarError(const std::string& msg) : Error(msg) {}
};

class VertexNotInQuiverError : public Error {
public:
    explicit VertexNotInQuiverError(const std::string& msg) : Error(msg) {}
};

class ColumnNotIncidenceError : public Error {
public:
    explicit ColumnNotIncidenceError(const std::string& msg) : Error(msg) {}
};

class NotNonNegativeError : public Error {
public:
    explicit NotNonNegativeError(const std::string& msg) : Error(msg) {}
};

class NotTypeAError : public Error {
public:
    explicit NotTypeAError(const std::string& msg) : Error(msg) {}
};

class WrongCorankError : public Error {
public:
    explicit WrongCorankError(const std::string& msg) : Error(msg) {}
};

// A mathematically guaranteed identity failed at runtime; indicates a bug.
class InternalConsistencyError : public Error {
public:
    explicit InternalConsistencyError(const std::string& msg) : Error(msg) {}
};

} // namespace gramq

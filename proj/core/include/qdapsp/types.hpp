#ifndef QDAPSP_TYPES_HPP
#define QDAPSP_TYPES_HPP

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace qdapsp {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;
using Weight = std::int64_t;

/// Every run owns one of these; draw order is part of a run's semantics.
using Rng = std::mt19937_64;

enum class ErrorCode {
    DuplicateEdge,
    SelfLoop,
    NonPositiveWeight,
    NodeOutOfRange,
    MissingEdge,
    NotStronglyConnected,
    SizeTooSmall,
    SizeTooLarge,
    TooManyEdges,
    InvalidConfig,
    Format,
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), _code(code) {}

    ErrorCode code() const noexcept { return _code; }

private:
    ErrorCode _code;
};

/// An ordered pair of distinct nodes; the behavioural descriptor of an archive cell.
struct Cell {
    NodeId source = 0;
    NodeId target = 0;

    friend bool operator==(const Cell&, const Cell&) = default;
};

} // namespace qdapsp

#endif

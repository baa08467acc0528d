#include <qdapsp/types.hpp>

namespace qdapsp {

const char* to_string(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorCode::NodeOutOfRange: return "NodeOutOfRange";
    case ErrorCode::MissingEdge: return "MissingEdge";
    case ErrorCode::NotStronglyConnected: return "NotStronglyConnected";
    case ErrorCode::SizeTooSmall: return "SizeTooSmall";
    case ErrorCode::SizeTooLarge: return "SizeTooLarge";
    case ErrorCode::TooManyEdges: return "TooManyEdges";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    case ErrorCode::Format: return "Format";
    }
    return "Unknown";
}

} // namespace qdapsp

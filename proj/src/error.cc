#include <tricolor/error.hh>

using namespace tricolor;

auto tricolor::error_kind_name(ErrorKind kind) -> std::string_view
{
    switch (kind) {
        case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
        case ErrorKind::EntryNotEven: return "EntryNotEven";
        case ErrorKind::SequenceTooShort: return "SequenceTooShort";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::Unrealizable: return "Unrealizable";
        case ErrorKind::NotEvenFan: return "NotEvenFan";
        case ErrorKind::InvalidInput: return "InvalidInput";
        case ErrorKind::InternalInconsistency: return "InternalInconsistency";
        case ErrorKind::InvalidGraph: return "InvalidGraph";
        case ErrorKind::PartialColoring: return "PartialColoring";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::InvalidInstance: return "InvalidInstance";
        case ErrorKind::MalformedRing: return "MalformedRing";
        case ErrorKind::NotAdjacent: return "NotAdjacent";
        case ErrorKind::DeletionDisconnects: return "DeletionDisconnects";
        case ErrorKind::InvalidSplit: return "InvalidSplit";
        case ErrorKind::GenerationFailure: return "GenerationFailure";
        case ErrorKind::InvalidConfig: return "InvalidConfig";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string & message) :
    std::runtime_error(std::string{error_kind_name(kind)} + ": " + message),
    _kind(kind)
{
}

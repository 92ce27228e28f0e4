#ifndef TRICOLOR_GUARD_TRICOLOR_ERROR_HH
#define TRICOLOR_GUARD_TRICOLOR_ERROR_HH 1

#include <stdexcept>
#include <string>
#include <string_view>

namespace tricolor
{
    enum class ErrorKind
    {
        // parity
        IndexOutOfRange,
        EntryNotEven,
        SequenceTooShort,
        ParseError,
        // ring
        Unrealizable,
        NotEvenFan,
        InvalidInput,
        InternalInconsistency,
        // graph
        InvalidGraph,
        PartialColoring,
        BudgetExceeded,
        // holes
        InvalidInstance,
        MalformedRing,
        NotAdjacent,
        DeletionDisconnects,
        InvalidSplit,
        // harness
        GenerationFailure,
        InvalidConfig
    };

    auto error_kind_name(ErrorKind kind) -> std::string_view;

    class Error : public std::runtime_error
    {
        private:
            ErrorKind _kind;

        public:
            Error(ErrorKind kind, const std::string & message);

            [[nodiscard]] auto kind() const noexcept -> ErrorKind { return _kind; }
    };
}

#endif

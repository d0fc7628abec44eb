#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace homlat {

enum class ErrorKind {
    TableLength,
    EntryRange,
    DuplicateOpName,
    EmptyOpName,
    SignatureMismatch,
    NotCompatible,
    NotClosed,
    BudgetExceeded,
    NoNullaries,
    NameClash,
    InvalidPoset,
    CyclicCovers,
    RedundantCover,
    NotALattice,
    EmptyPoset,
    NoTop,
    NotOrderPreserving,
    NotQuasiOrder,
    NotJoinClosed,
    NotAGroup,
    NotASubgroup,
    NullaryPresent,
    NotMonounary,
    NoTopInP,
    NotAllNamed,
    InvalidArgument,
    Parse,
};

inline std::string_view to_string(ErrorKind k)
{
    switch (k) {
        case ErrorKind::TableLength: return "TableLength";
        case ErrorKind::EntryRange: return "EntryRange";
        case ErrorKind::DuplicateOpName: return "DuplicateOpName";
        case ErrorKind::EmptyOpName: return "EmptyOpName";
        case ErrorKind::SignatureMismatch: return "SignatureMismatch";
        case ErrorKind::NotCompatible: return "NotCompatible";
        case ErrorKind::NotClosed: return "NotClosed";
        case ErrorKind::BudgetExceeded: return "BudgetExceeded";
        case ErrorKind::NoNullaries: return "NoNullaries";
        case ErrorKind::NameClash: return "NameClash";
        case ErrorKind::InvalidPoset: return "InvalidPoset";
        case ErrorKind::CyclicCovers: return "CyclicCovers";
        case ErrorKind::RedundantCover: return "RedundantCover";
        case ErrorKind::NotALattice: return "NotALattice";
        case ErrorKind::EmptyPoset: return "EmptyPoset";
        case ErrorKind::NoTop: return "NoTop";
        case ErrorKind::NotOrderPreserving: return "NotOrderPreserving";
        case ErrorKind::NotQuasiOrder: return "NotQuasiOrder";
        case ErrorKind::NotJoinClosed: return "NotJoinClosed";
        case ErrorKind::NotAGroup: return "NotAGroup";
        case ErrorKind::NotASubgroup: return "NotASubgroup";
        case ErrorKind::NullaryPresent: return "NullaryPresent";
        case ErrorKind::NotMonounary: return "NotMonounary";
        case ErrorKind::NoTopInP: return "NoTopInP";
        case ErrorKind::NotAllNamed: return "NotAllNamed";
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::Parse: return "Parse";
    }
    return "Unknown";
}

/// Every failure raised by the library carries a machine-checkable kind.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string & what) :
        std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind)
    {
    }

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace homlat

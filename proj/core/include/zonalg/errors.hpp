#pragma once
#include <stdexcept>
#include <string>

namespace zonalg {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct NonSquare : Error {
    NonSquare() : Error("matrix is not square") {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& what = "dimension mismatch") : Error(what) {}
};

struct ZeroDenominator : Error {
    ZeroDenominator() : Error("rational with zero denominator") {}
};

struct ZeroColumn : Error {
    explicit ZeroColumn(std::size_t index)
        : Error("configuration column " + std::to_string(index) + " is zero") {}
};

struct RankDeficient : Error {
    explicit RankDeficient(const std::string& what = "configuration does not span") : Error(what) {}
};

struct BadIndex : Error {
    explicit BadIndex(const std::string& what = "index out of range") : Error(what) {}
};

struct DependentInput : Error {
    explicit DependentInput(const std::string& what = "subset is linearly dependent") : Error(what) {}
};

struct GroundSetTooLarge : Error {
    explicit GroundSetTooLarge(std::size_t size, std::size_t cap)
        : Error("ground set of size " + std::to_string(size) +
                " exceeds enumeration cap " + std::to_string(cap)) {}
};

struct GenericityFailure : Error {
    explicit GenericityFailure(const std::string& what) : Error(what) {}
};

struct TruncationTooLow : Error {
    explicit TruncationTooLow(const std::string& what) : Error(what) {}
};

struct NotInternalBasis : Error {
    NotInternalBasis() : Error("basis has an internally active element") {}
};

struct WrongGroundSet : Error {
    explicit WrongGroundSet(const std::string& what = "arrangement built over a different ground set")
        : Error(what) {}
};

struct Disconnected : Error {
    explicit Disconnected(const std::string& what = "graph is not connected") : Error(what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace zonalg

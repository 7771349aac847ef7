#ifndef GGM_ERRORS_HPP
#define GGM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ggm {

// Base class for all library errors. Subclasses are grouped by the exit-code
// contract used by the CLI: model/graph errors, data errors, budget errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// --- model/graph errors ---
struct NotDecomposable : Error {
    explicit NotDecomposable(const std::string& msg = "graph is not decomposable") : Error(msg) {}
};
struct EdgeAbsent : Error {
    explicit EdgeAbsent(const std::string& msg = "edge is not present in the graph") : Error(msg) {}
};
struct EdgePresent : Error {
    explicit EdgePresent(const std::string& msg = "edge is already present in the graph") : Error(msg) {}
};
struct NotNested : Error {
    explicit NotNested(const std::string& msg = "edge set of source graph is not contained in target graph") : Error(msg) {}
};
struct IllegalMove : Error {
    explicit IllegalMove(const std::string& msg = "single-edge move does not preserve decomposability") : Error(msg) {}
};
struct NotPositiveDefinite : Error {
    explicit NotPositiveDefinite(const std::string& msg = "matrix is not positive definite") : Error(msg) {}
};
struct EmptyGraph : Error {
    explicit EmptyGraph(const std::string& msg = "graph has no edges") : Error(msg) {}
};
struct InvalidParams : Error {
    explicit InvalidParams(const std::string& msg) : Error(msg) {}
};

// --- data errors ---
struct DataError : Error {
    explicit DataError(const std::string& msg) : Error(msg) {}
};
struct DegenerateColumn : DataError {
    explicit DegenerateColumn(const std::string& msg = "column has zero centered variance") : DataError(msg) {}
};
struct SingularConditioningSet : DataError {
    explicit SingularConditioningSet(const std::string& msg = "Gram submatrix of conditioning set is singular") : DataError(msg) {}
};
struct SingularGram : DataError {
    explicit SingularGram(const std::string& msg = "Gram submatrix is not positive definite") : DataError(msg) {}
};
struct CliqueTooLargeForSampleSize : DataError {
    explicit CliqueTooLargeForSampleSize(const std::string& msg = "sample size does not exceed clique size") : DataError(msg) {}
};

// --- budget errors ---
struct BudgetError : Error {
    explicit BudgetError(const std::string& msg) : Error(msg) {}
};
struct TooLarge : BudgetError {
    explicit TooLarge(const std::string& msg = "problem exceeds the configured enumeration budget") : BudgetError(msg) {}
};
struct BudgetExceeded : BudgetError {
    explicit BudgetExceeded(const std::string& msg = "computation exceeds the configured compute cap") : BudgetError(msg) {}
};

// --- argument errors (treated as data errors by the CLI) ---
struct InvalidEpsilon : Error {
    explicit InvalidEpsilon(const std::string& msg = "epsilon outside its valid range") : Error(msg) {}
};

}  // namespace ggm

#endif

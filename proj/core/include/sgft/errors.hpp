#pragma once

#include <stdexcept>
#include <string>

namespace sgft {

// Base for all toolkit errors. `data` errors come from bad inputs
// (graphs, files, indices); `numerical` from failed or ill-posed
// computations. The CLI maps these onto exit codes.
class Error : public std::runtime_error {
public:
  enum class Category { data, numerical };

  Error(Category cat, const std::string& msg)
      : std::runtime_error(msg), category_(cat) {}

  Category category() const { return category_; }

private:
  Category category_;
};

class DataError : public Error {
public:
  explicit DataError(const std::string& msg) : Error(Category::data, msg) {}
};

class NumericalError : public Error {
public:
  explicit NumericalError(const std::string& msg)
      : Error(Category::numerical, msg) {}
};

#define SGFT_DATA_ERROR(NAME)                                         \
  class NAME : public DataError {                                     \
  public:                                                             \
    explicit NAME(const std::string& msg) : DataError(#NAME ": " + msg) {} \
  }

#define SGFT_NUMERICAL_ERROR(NAME)                                    \
  class NAME : public NumericalError {                                \
  public:                                                             \
    explicit NAME(const std::string& msg)                             \
        : NumericalError(#NAME ": " + msg) {}                         \
  }

SGFT_DATA_ERROR(InvalidEdge);
SGFT_DATA_ERROR(SelfLoop);
SGFT_DATA_ERROR(DuplicateEdge);
SGFT_DATA_ERROR(DisconnectedGraph);
SGFT_DATA_ERROR(EmptySeed);
SGFT_DATA_ERROR(FullSeed);
SGFT_DATA_ERROR(TruncatedBasis);
SGFT_DATA_ERROR(FrequencyOutOfRange);
SGFT_DATA_ERROR(NotARingEdge);
SGFT_DATA_ERROR(DuplicatePoints);
SGFT_DATA_ERROR(MalformedRow);
SGFT_DATA_ERROR(EmptyDataset);
SGFT_DATA_ERROR(CacheMismatch);
SGFT_DATA_ERROR(CacheFormat);

SGFT_NUMERICAL_ERROR(NotSymmetric);
SGFT_NUMERICAL_ERROR(ConvergenceFailure);
SGFT_NUMERICAL_ERROR(GammaOutOfRange);
SGFT_NUMERICAL_ERROR(PreconditionViolated);
SGFT_NUMERICAL_ERROR(DegenerateWindow);
SGFT_NUMERICAL_ERROR(ZeroVarianceSignature);

#undef SGFT_DATA_ERROR
#undef SGFT_NUMERICAL_ERROR

}  // namespace sgft

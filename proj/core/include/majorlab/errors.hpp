#ifndef MAJORLAB_ERRORS_HPP
#define MAJORLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace majorlab {

// Base class for everything this library throws on its own behalf.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimMismatch : Error { using Error::Error; };
struct NotHermitian : Error { using Error::Error; };
struct NotPsd : Error { using Error::Error; };
struct NotNormal : Error { using Error::Error; };
struct NotContraction : Error { using Error::Error; };
struct NotSubUnital : Error { using Error::Error; };
struct NoConvergence : Error { using Error::Error; };
struct BadOrder : Error { using Error::Error; };
struct BadDomain : Error { using Error::Error; };
struct BadGrid : Error { using Error::Error; };
struct UnknownCheck : Error { using Error::Error; };
struct UnknownSuite : Error { using Error::Error; };
struct UnknownObjective : Error { using Error::Error; };
struct SignatureMismatch : Error { using Error::Error; };

}  // namespace majorlab

#endif

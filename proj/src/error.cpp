#include "thetapos/error.hpp"

namespace thetapos {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Parse: return "parse error";
    case ErrorKind::Dimension: return "dimension error";
    case ErrorKind::Index: return "index error";
    case ErrorKind::Domain: return "domain error";
    case ErrorKind::Singular: return "singularity error";
    case ErrorKind::Transversality: return "transversality error";
    case ErrorKind::Decomposition: return "decomposition error";
    case ErrorKind::Limit: return "size limit exceeded";
  }
  return "unknown error";
}

}  // namespace thetapos

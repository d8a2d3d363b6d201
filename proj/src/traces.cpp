#include "charvar/traces.hpp"

namespace charvar {

std::string isom_kind_name(IsomKind k) {
  switch (k) {
    case IsomKind::Hyperbolic:
      return "hyperbolic";
    case IsomKind::Parabolic:
      return "parabolic";
    case IsomKind::Elliptic:
      return "elliptic";
  }
  return "?";
}

}  // namespace charvar

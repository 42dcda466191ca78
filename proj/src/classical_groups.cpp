#include "umrow/classical_groups.hpp"

namespace umrow {

const char* to_string(Form f) {
  return f == Form::Symplectic ? "symplectic" : "orthogonal";
}

}  // namespace umrow

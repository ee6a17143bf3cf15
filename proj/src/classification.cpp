#include "overring/classification.hpp"

namespace overring {

namespace {

// a ⇒ b on decided values.
bool implies(Tri a, Tri b) { return !(a == Tri::yes && b == Tri::no); }

}  // namespace

bool ClassificationReport::hierarchy_consistent() const {
  return implies(is_fo, is_fc) && implies(is_fc, is_super_t_linkative) &&
         implies(is_super_t_linkative, is_t_linkative);
}

}  // namespace overring

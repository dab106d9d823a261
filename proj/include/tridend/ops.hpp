#ifndef TRIDEND_OPS_HPP
#define TRIDEND_OPS_HPP

namespace tridend {

// The three tridendriform strands.
enum class TriOp { Prec, Succ, Dot };

} // namespace tridend

#endif

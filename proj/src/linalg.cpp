#include "qdc/linalg.hpp"

namespace qdc {

template class RowEchelon<GaussRat>;
template class RowEchelon<Rational>;
template class SpanBasis<GaussRat>;
template class DenseLU<GaussRat>;
template class DenseLU<Rational>;
template class BlockSolver<GaussRat>;

}  // namespace qdc

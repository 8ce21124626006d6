/// Sparse right-hand-side corrections at irregular nodes and the corrected
/// RHS assembly of the modified scheme.
///
/// Every difference stencil whose arm is cut by the interface gets one
/// correction per cut arm: the truncated Taylor series of the solution
/// jumps, expanded from the intersection point to the stencil point on the
/// far side, scaled by the stencil coefficient of that point. Corrections
/// take the printed sign when the stencil's own node lies on the plus side
/// and are negated otherwise.
///
/// Momentum equations receive Laplacian-arm corrections (three-term series
/// over h^2) and pressure-gradient corrections (two-term series over h);
/// the divergence equation receives velocity corrections (three-term
/// series over h). The direction argument says whether the far stencil
/// point lies on the positive side of the arm's axis relative to the node;
/// offsets are signed distances from the crossing to the far point.

#pragma once

#include <map>
#include <tuple>
#include <vector>

#include "stokesmac/geometry.hpp"
#include "stokesmac/jumps.hpp"
#include "stokesmac/problems.hpp"

namespace stokesmac {

class CorrectionField {
public:
    using Key = std::tuple<int, int, int>;  // family, i, j

    /// Accumulates; exact zeros are dropped so a zero-jump problem leaves
    /// the field empty and the scheme untouched bit for bit.
    void add(GridFamily f, int i, int j, double value, int crossing = -1);
    double at(GridFamily f, int i, int j) const;
    std::size_t size() const { return entries_.size(); }
    const std::map<Key, double>& entries() const { return entries_; }
    const std::map<Key, std::vector<int>>& provenance() const { return provenance_; }
    void track_provenance(bool on) { track_ = on; }

private:
    std::map<Key, double> entries_;
    std::map<Key, std::vector<int>> provenance_;
    bool track_ = false;
};

/// Correction of a velocity Laplacian stencil with a cut arm.
/// offset = (far stencil point coordinate) - (crossing coordinate), signed.
double laplacian_correction(const JumpSet& jumps, double center_side, int component,
                            Axis axis, double offset, double h);

enum class GradQuantity { Px, Py, U1x, U2y };

/// Correction of a first-difference stencil (pressure gradient in a
/// momentum equation, or a velocity term of the divergence).
/// direction = +1 when the far stencil point lies on the positive side of
/// the axis relative to the equation's node.
double gradient_correction(const JumpSet& jumps, double center_side, GradQuantity quantity,
                           double offset, int direction, double h);

struct AssemblyResult {
    Field f1;  // corrected momentum RHS, VEdge
    Field f2;  // HEdge
    Field g;   // corrected divergence RHS, CellCenter
    CorrectionField corrections;
    std::vector<Crossing> crossings;  // deterministic first-encounter order
    std::vector<JumpSet> jumps;       // aligned with crossings
};

/// Samples the forcing at the staggered points and adds every correction.
AssemblyResult assemble_rhs(const StaggeredGrid& grid, const ProblemSpec& problem,
                            bool with_provenance = false);

/// CSV debug dump of a correction field: family,i,j,value lines.
std::string corrections_to_csv(const CorrectionField& c);

}  // namespace stokesmac

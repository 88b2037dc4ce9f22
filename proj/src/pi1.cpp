#include "delsarte/pi1.hpp"

#include <sstream>

#include "delsarte/lattice.hpp"
#include "delsarte/sparse_smith.hpp"

namespace delsarte {

Pi1Result pi1(const FiniteQuotient& q) {
    // generators of the sum over pairs i < j of span(v_i, v_j) ∩ Ker,
    // expressed in coordinates of the kernel basis
    std::vector<std::vector<Int>> coord_rows;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) {
            IntMatrix plane(2, 3);
            plane.set_row(0, FiniteQuotient::generator_vector(i));
            plane.set_row(1, FiniteQuotient::generator_vector(j));
            IntMatrix meet = lattice_intersection(plane, q.kernel());
            for (std::size_t r = 0; r < meet.rows(); ++r) {
                auto x = solve_in_lattice(q.kernel(), meet.row(r));
                if (!x) {
                    std::ostringstream os;
                    os << "pi1: intersection generator escapes the kernel lattice for pair (" << i
                       << "," << j << ")";
                    throw internal_error(os.str());
                }
                coord_rows.push_back(std::move(*x));
            }
        }

    IntMatrix n = IntMatrix::from_rows(coord_rows, 3);
    AbelianGroupStructure s = smith_invariants(n).cokernel(3);
    if (s.free_rank != 0 || s.torsion_factors.size() > 1) {
        std::ostringstream os;
        os << "pi1: result " << s.str() << " is not finite cyclic for kernel "
           << matrix_text(q.kernel()) << "; this falsifies the structure theorem";
        throw internal_error(os.str());
    }
    Int order = s.order();
    if (!divides(order, height_of(q)))
        throw internal_error("pi1: order does not divide the height for kernel " +
                             matrix_text(q.kernel()));
    return Pi1Result{std::move(s), std::move(order)};
}

}  // namespace delsarte

#ifndef GELL_KTHEORY_HPP
#define GELL_KTHEORY_HPP

#include <map>
#include <string>
#include <vector>

#include "gell/exterior.hpp"
#include "gell/odometer.hpp"
#include "gell/supernatural.hpp"

namespace gell {

enum class Parity { even, odd };

inline int parity_bit(Parity p) { return p == Parity::odd ? 1 : 0; }
inline Parity parity_of_dimension(int d) { return d % 2 ? Parity::odd : Parity::even; }

// A K-theory class of the solenoidal mapping torus in tangential-Chern
// coordinates: integer coefficients on subsets of {1..d} at a tower stage.
// Stage-(j-1) classes map to stage-j classes degreewise by Lambda^k(M_j^T).
class ExteriorClass {
public:
    ExteriorClass(SpecPtr spec, int stage,
                  std::map<SubsetMask, Int, SubsetOrder> coefficients = {});

    const SpecPtr& spec() const { return spec_; }
    int stage() const { return stage_; }
    const std::map<SubsetMask, Int, SubsetOrder>& coefficients() const { return coeffs_; }

    Int coefficient(SubsetMask s) const;
    void set_coefficient(SubsetMask s, Int value);  // drops zeros

    friend bool operator==(const ExteriorClass&, const ExteriorClass&);

private:
    SpecPtr spec_;
    int stage_;
    std::map<SubsetMask, Int, SubsetOrder> coeffs_;
};

// Degree-k connecting block at step j: Lambda^k(M_j^T).
IntMatrix connecting_block(const OdometerSpec& spec, int j, int degree);

// Block diagonal over the degrees of one parity (increasing degree).
IntMatrix connecting_map(const OdometerSpec& spec, int j, Parity parity);

// Block diagonal over all degrees 0..d.
IntMatrix connecting_full(const OdometerSpec& spec, int j);

// Image of x at a later stage; maps are not invertible over Z, so
// stage < stage(x) is rejected.
ExteriorClass push_to_stage(const ExteriorClass& x, int stage);

// Colimit equality: push both to the maximal common stage and compare
// (connecting maps are injective over Q, so this is definitive).
bool classes_equal(const ExteriorClass& x, const ExteriorClass& y);

// The class of the unit: the top-degree generator at stage 0 (the Bott class
// supported on the fundamental domain).
ExteriorClass order_unit(SpecPtr spec);

// K-theory transfer of a clopen cylinder: the stage-j top class, oriented so
// its trace is the cylinder measure; independent of the coset representative.
ExteriorClass transfer_class(SpecPtr spec, const CylinderSet& c);

// Finite-stage presentation of K^parity as a direct limit.
struct KGroupPresentation {
    Parity parity = Parity::even;
    int dimension = 0;
    int depth = 0;
    long rank = 0;                                    // 2^(d-1) per stage
    std::vector<IntMatrix> connecting;                // steps 1..depth
    std::map<int, SupernaturalNumber> degree_steinitz;  // |det| tower per degree block
    std::vector<RatMatrix> colimit_embedding;         // stage j -> Q^rank, inverse of composed maps
};

KGroupPresentation kgroup_report(const OdometerSpec& spec, Parity parity, int depth);

// Certificate for an intertwining of two towers along a cofinal sequence of
// stage pairs. Each phi acts on the full exterior basis (degrees 0..d, each
// block lex-ordered; dimension 2^d).
struct CertificateEntry {
    int stage_a = 0;
    int stage_b = 0;
    IntMatrix phi;
};

struct IntertwinerCertificate {
    std::vector<CertificateEntry> entries;
};

struct CertificateCheck {
    bool ok = false;
    bool squares_ok = false;      // all degrees
    bool top_degree_ok = false;   // top-degree squares plus the unit/transfer triangle
    bool unit_ok = false;
    bool transfer_ok = false;
    std::vector<std::string> failures;  // first failing square named per category
};

// True iff (a) every consecutive square phi_{k+1} conn_A = conn_B phi_k
// commutes, (b) the order unit maps to the order unit as colimit classes,
// (c) transfer classes at certified stages correspond. The top-degree part
// of (a)-(c) is also reported on its own, so lower-degree defects are
// visible separately.
CertificateCheck check_basic_certificate(SpecPtr spec_a, SpecPtr spec_b,
                                         const IntertwinerCertificate& cert);

}  // namespace gell

#endif

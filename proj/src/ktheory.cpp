#include "gell/ktheory.hpp"

#include <stdexcept>
#include <utility>

namespace gell {

namespace {

IntMatrix block_diagonal(const std::vector<IntMatrix>& blocks) {
    int n = 0;
    for (const IntMatrix& b : blocks) n += b.rows;
    IntMatrix out(n, n);
    int off = 0;
    for (const IntMatrix& b : blocks) {
        for (int i = 0; i < b.rows; ++i)
            for (int j = 0; j < b.cols; ++j) out.at(off + i, off + j) = b.at(i, j);
        off += b.rows;
    }
    return out;
}

void require_same_spec(const ExteriorClass& x, const ExteriorClass& y) {
    if (!(*x.spec() == *y.spec()))
        throw std::invalid_argument("classes live over different odometer specs");
}

}  // namespace

ExteriorClass::ExteriorClass(SpecPtr spec, int stage,
                             std::map<SubsetMask, Int, SubsetOrder> coefficients)
    : spec_(std::move(spec)), stage_(stage), coeffs_(std::move(coefficients)) {
    if (!spec_) throw std::invalid_argument("class needs a spec");
    spec_->require_stage(stage_);
    const SubsetMask limit = (SubsetMask{1} << spec_->rank());
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
        if (it->first >= limit) throw std::invalid_argument("coefficient subset out of range");
        it = (it->second == 0) ? coeffs_.erase(it) : std::next(it);
    }
}

Int ExteriorClass::coefficient(SubsetMask s) const {
    auto it = coeffs_.find(s);
    return it == coeffs_.end() ? Int(0) : it->second;
}

void ExteriorClass::set_coefficient(SubsetMask s, Int value) {
    if (value == 0)
        coeffs_.erase(s);
    else
        coeffs_[s] = std::move(value);
}

bool operator==(const ExteriorClass& x, const ExteriorClass& y) {
    return *x.spec() == *y.spec() && x.stage() == y.stage() &&
           x.coefficients() == y.coefficients();
}

IntMatrix connecting_block(const OdometerSpec& spec, int j, int degree) {
    spec.require_stage(j);
    if (j < 1) throw std::invalid_argument("connecting maps start at stage 1");
    return exterior_power(transpose(spec.step_at(j)), degree);
}

IntMatrix connecting_map(const OdometerSpec& spec, int j, Parity parity) {
    std::vector<IntMatrix> blocks;
    for (int k = parity_bit(parity); k <= spec.rank(); k += 2)
        blocks.push_back(connecting_block(spec, j, k));
    return block_diagonal(blocks);
}

IntMatrix connecting_full(const OdometerSpec& spec, int j) {
    std::vector<IntMatrix> blocks;
    for (int k = 0; k <= spec.rank(); ++k) blocks.push_back(connecting_block(spec, j, k));
    return block_diagonal(blocks);
}

ExteriorClass push_to_stage(const ExteriorClass& x, int stage) {
    if (stage < x.stage())
        throw std::invalid_argument("cannot push to an earlier stage: maps are not invertible over Z");
    x.spec()->require_stage(stage);
    const int d = x.spec()->rank();
    std::map<SubsetMask, Int, SubsetOrder> cur(x.coefficients().begin(), x.coefficients().end());
    for (int j = x.stage() + 1; j <= stage; ++j) {
        IntMatrix mt = transpose(x.spec()->step_at(j));
        std::map<SubsetMask, Int, SubsetOrder> next;
        for (int k = 0; k <= d; ++k) {
            std::vector<SubsetMask> basis = lex_subsets(d, k);
            bool any = false;
            for (SubsetMask s : basis)
                if (cur.count(s)) { any = true; break; }
            if (!any) continue;
            IntMatrix block = exterior_power(mt, k);
            for (size_t col = 0; col < basis.size(); ++col) {
                auto it = cur.find(basis[col]);
                if (it == cur.end()) continue;
                for (size_t row = 0; row < basis.size(); ++row) {
                    const Int& m = block.at(static_cast<int>(row), static_cast<int>(col));
                    if (m == 0) continue;
                    next[basis[row]] += m * it->second;
                }
            }
        }
        for (auto it = next.begin(); it != next.end();)
            it = (it->second == 0) ? next.erase(it) : std::next(it);
        cur = std::move(next);
    }
    return ExteriorClass(x.spec(), stage, std::move(cur));
}

bool classes_equal(const ExteriorClass& x, const ExteriorClass& y) {
    require_same_spec(x, y);
    int stage = std::max(x.stage(), y.stage());
    ExteriorClass px = push_to_stage(x, stage);
    ExteriorClass py = push_to_stage(y, stage);
    return px.coefficients() == py.coefficients();
}

ExteriorClass order_unit(SpecPtr spec) {
    if (!spec) throw std::invalid_argument("order_unit needs a spec");
    const SubsetMask top = (SubsetMask{1} << spec->rank()) - 1;
    std::map<SubsetMask, Int, SubsetOrder> c;
    c[top] = 1;
    return ExteriorClass(std::move(spec), 0, std::move(c));
}

ExteriorClass transfer_class(SpecPtr spec, const CylinderSet& c) {
    if (!spec) throw std::invalid_argument("transfer_class needs a spec");
    spec->require_stage(c.stage);
    if (static_cast<int>(c.coords.size()) != spec->rank())
        throw std::invalid_argument("cylinder has wrong dimension");
    const SubsetMask top = (SubsetMask{1} << spec->rank()) - 1;
    std::map<SubsetMask, Int, SubsetOrder> coeffs;
    // Orientation: the Bott class of the stage-j fundamental domain sits at
    // sign(det B_j) times the coordinate top generator, so that its trace is
    // the (positive) cylinder measure even through orientation-reversing steps.
    coeffs[top] = sign_of(spec->signed_index_at(c.stage));
    return ExteriorClass(std::move(spec), c.stage, std::move(coeffs));
}

KGroupPresentation kgroup_report(const OdometerSpec& spec, Parity parity, int depth) {
    spec.require_stage(depth);
    KGroupPresentation rep;
    rep.parity = parity;
    rep.dimension = spec.rank();
    rep.depth = depth;
    rep.rank = 0;
    for (int k = parity_bit(parity); k <= spec.rank(); k += 2)
        rep.rank += binomial(spec.rank(), k);

    std::map<int, std::vector<Int>> block_dets;
    std::map<int, std::vector<Int>> tail_dets;
    RatMatrix composed_inv = RatMatrix::identity(static_cast<int>(rep.rank));
    rep.colimit_embedding.push_back(composed_inv);
    for (int j = 1; j <= depth; ++j) {
        IntMatrix conn = connecting_map(spec, j, parity);
        rep.connecting.push_back(conn);
        composed_inv = composed_inv * inverse(conn);
        rep.colimit_embedding.push_back(composed_inv);
        for (int k = parity_bit(parity); k <= spec.rank(); k += 2)
            block_dets[k].push_back(abs(determinant(connecting_block(spec, j, k))));
    }
    if (spec.has_tail()) {
        for (const IntMatrix& m : spec.tail())
            for (int k = parity_bit(parity); k <= spec.rank(); k += 2)
                tail_dets[k].push_back(abs(determinant(exterior_power(transpose(m), k))));
    }
    for (int k = parity_bit(parity); k <= spec.rank(); k += 2)
        rep.degree_steinitz[k] = steinitz(block_dets[k], tail_dets[k]);
    return rep;
}

CertificateCheck check_basic_certificate(SpecPtr spec_a, SpecPtr spec_b,
                                         const IntertwinerCertificate& cert) {
    if (!spec_a || !spec_b) throw std::invalid_argument("certificate check needs two specs");
    if (spec_a->rank() != spec_b->rank())
        throw std::invalid_argument("certificate check needs specs of equal rank");
    if (cert.entries.empty()) throw std::invalid_argument("certificate has no entries");

    const int d = spec_a->rank();
    const int full = 1 << d;
    CertificateCheck out;
    out.squares_ok = out.unit_ok = out.transfer_ok = true;

    int prev_a = -1, prev_b = -1;
    for (size_t k = 0; k < cert.entries.size(); ++k) {
        const CertificateEntry& e = cert.entries[k];
        spec_a->require_stage(e.stage_a);
        spec_b->require_stage(e.stage_b);
        if (e.phi.rows != full || e.phi.cols != full)
            throw std::invalid_argument("certificate matrix " + std::to_string(k) +
                                        " is not 2^d x 2^d");
        if (e.stage_a <= prev_a || (k > 0 && e.stage_b < prev_b))
            throw std::invalid_argument("certificate stages must increase");
        prev_a = e.stage_a;
        prev_b = e.stage_b;
    }

    const std::vector<SubsetMask> basis = subsets_by_degree(d);
    bool top_squares_ok = true;

    // (a) commuting squares along consecutive certified pairs
    for (size_t k = 0; k + 1 < cert.entries.size(); ++k) {
        const CertificateEntry& e0 = cert.entries[k];
        const CertificateEntry& e1 = cert.entries[k + 1];
        IntMatrix conn_a = IntMatrix::identity(full);
        for (int j = e0.stage_a + 1; j <= e1.stage_a; ++j)
            conn_a = connecting_full(*spec_a, j) * conn_a;
        IntMatrix conn_b = IntMatrix::identity(full);
        for (int j = e0.stage_b + 1; j <= e1.stage_b; ++j)
            conn_b = connecting_full(*spec_b, j) * conn_b;
        IntMatrix lhs = e1.phi * conn_a;
        IntMatrix rhs = conn_b * e0.phi;
        if (lhs == rhs) continue;
        out.squares_ok = false;
        // the top-degree component is the last basis row
        for (int c = 0; c < full; ++c)
            if (lhs.at(full - 1, c) != rhs.at(full - 1, c)) {
                top_squares_ok = false;
                break;
            }
        // name the first degree whose rows disagree
        for (int r = 0; r < full; ++r) {
            bool diff = false;
            for (int c = 0; c < full; ++c)
                if (lhs.at(r, c) != rhs.at(r, c)) { diff = true; break; }
            if (diff) {
                out.failures.push_back(
                    "square " + std::to_string(k) + " (A stages " + std::to_string(e0.stage_a) +
                    "->" + std::to_string(e1.stage_a) + ", B stages " +
                    std::to_string(e0.stage_b) + "->" + std::to_string(e1.stage_b) +
                    ") fails in degree " + std::to_string(subset_size(basis[r])));
                break;
            }
        }
    }

    auto apply = [&](const IntMatrix& phi, const ExteriorClass& x, int stage_b) {
        std::map<SubsetMask, Int, SubsetOrder> c;
        for (size_t col = 0; col < basis.size(); ++col) {
            Int xc = x.coefficient(basis[col]);
            if (xc == 0) continue;
            for (size_t row = 0; row < basis.size(); ++row) {
                const Int& m = phi.at(static_cast<int>(row), static_cast<int>(col));
                if (m != 0) c[basis[row]] += m * xc;
            }
        }
        return ExteriorClass(spec_b, stage_b, std::move(c));
    };

    // (b) order unit correspondence through the first certified pair
    {
        const CertificateEntry& e0 = cert.entries.front();
        ExteriorClass unit_a = push_to_stage(order_unit(spec_a), e0.stage_a);
        ExteriorClass image = apply(e0.phi, unit_a, e0.stage_b);
        if (!classes_equal(image, order_unit(spec_b))) {
            out.unit_ok = false;
            out.failures.push_back("order unit is not preserved at certificate entry 0");
        }
    }

    // (c) transfer triangle: cylinder classes at certified stages correspond
    for (size_t k = 0; k < cert.entries.size(); ++k) {
        const CertificateEntry& e = cert.entries[k];
        CylinderSet ca{e.stage_a, std::vector<Int>(static_cast<size_t>(d), Int(0))};
        CylinderSet cb{e.stage_b, std::vector<Int>(static_cast<size_t>(d), Int(0))};
        ExteriorClass image = apply(e.phi, transfer_class(spec_a, ca), e.stage_b);
        if (!classes_equal(image, transfer_class(spec_b, cb))) {
            out.transfer_ok = false;
            out.failures.push_back("transfer triangle fails at certificate entry " +
                                   std::to_string(k) + " (A stage " + std::to_string(e.stage_a) +
                                   ", B stage " + std::to_string(e.stage_b) + ")");
            break;
        }
    }

    out.top_degree_ok = top_squares_ok && out.unit_ok && out.transfer_ok;
    out.ok = out.squares_ok && out.unit_ok && out.transfer_ok;
    return out;
}

}  // namespace gell

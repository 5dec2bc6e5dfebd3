#ifndef GELL_TWIST_HPP
#define GELL_TWIST_HPP

#include <map>
#include <optional>
#include <vector>

#include "gell/exterior.hpp"
#include "gell/matrix.hpp"
#include "gell/pfaffian.hpp"

namespace gell {

// Rational skew-symmetric form Theta defining the cocycle
// sigma(m, n) = e^{-pi i m^T Theta n}.
class SkewForm {
public:
    explicit SkewForm(RatMatrix theta);

    int dimension() const { return theta_.rows; }
    const RatMatrix& matrix() const { return theta_; }
    const Rat& entry(int i, int j) const { return theta_.at(i, j); }

    friend bool operator==(const SkewForm&, const SkewForm&) = default;

private:
    RatMatrix theta_;
};

// d = 2 only: Theta = theta * J with theta a formal symbol.
inline constexpr int kSymbolicDimension = 2;

// Twist attached to a spec: absent, a rational form, or the d = 2 symbolic
// one-parameter form.
struct Twist {
    enum class Mode { none, numeric, symbolic };
    Mode mode = Mode::none;
    std::optional<SkewForm> form;  // set iff numeric

    static Twist untwisted() { return {}; }
    static Twist numeric(SkewForm f);
    static Twist symbolic();

    bool twisted() const { return mode != Mode::none; }

    friend bool operator==(const Twist&, const Twist&) = default;
};

// Phase exponent r for e^{-pi i r}, reduced into [0, 2).
struct PhaseExponent {
    Rat value;

    friend bool operator==(const PhaseExponent&, const PhaseExponent&) = default;
};

// Exponent of sigma(m, n): m^T Theta n mod 2.
PhaseExponent cocycle(const SkewForm& theta, const std::vector<Int>& m,
                      const std::vector<Int>& n);

// sigma(m,n) sigma(m+n,k) = sigma(m,n+k) sigma(n,k) and normalisation, at the
// exponent level.
bool cocycle_identity_check(const SkewForm& theta, const std::vector<Int>& m,
                            const std::vector<Int>& n, const std::vector<Int>& k);

// All Pf(Theta_I) over even subsets I, including the empty set -> 1.
std::map<SubsetMask, Rat, SubsetOrder> pfaffian_profile(const SkewForm& theta,
                                                        int max_dimension = 8);

// B^T Theta B: the form pulled back to the sublattice spanned by B's columns.
SkewForm restricted_form(const SkewForm& theta, const IntMatrix& b);

}  // namespace gell

#endif

#pragma once

#include <map>
#include <string>
#include <vector>

#include "lrw/cochain.hpp"

namespace lrw {

/// Ledger atom: a connection class remembered by rank, first Chern
/// representative and whether its curvature is scalar (f * Id).
struct KAtom {
    long rank = 1;
    Cochain c1_rep;
    bool scalar_type = false;
    std::string label;

    friend bool operator<(const KAtom& a, const KAtom& b) {
        if (a.rank != b.rank)
            return a.rank < b.rank;
        if (a.scalar_type != b.scalar_type)
            return a.scalar_type < b.scalar_type;
        if (a.label != b.label)
            return a.label < b.label;
        return a.c1_rep < b.c1_rep;
    }
    friend bool operator==(const KAtom& a, const KAtom& b) {
        return a.rank == b.rank && a.scalar_type == b.scalar_type && a.label == b.label &&
               a.c1_rep == b.c1_rep;
    }
};

KAtom make_atom(long rank, Cochain c1_rep, bool scalar_type, std::string label);
/// Trivial flat rank-1 atom.
KAtom unit_atom(const Presentation& pres);

/// Formal integer combination of atoms.
class KClass {
  public:
    KClass() = default;
    explicit KClass(const KAtom& atom, long mult = 1) { add(atom, mult); }

    const std::map<KAtom, long>& atoms() const { return mult_; }
    bool is_zero() const { return mult_.empty(); }
    long total_multiplicity() const;
    long total_rank() const;

    void add(const KAtom& atom, long mult);

    friend KClass operator+(const KClass& a, const KClass& b);
    friend KClass operator-(const KClass& a, const KClass& b);
    KClass operator-() const;
    friend bool operator==(const KClass& a, const KClass& b) { return a.mult_ == b.mult_; }

  private:
    std::map<KAtom, long> mult_;
};

/// Atom rule: rank r r', c1 = r' c1 + r c1', scalar preserved when both are.
KClass k_tensor(const KClass& a, const KClass& b);

/// Additive extension of atom c1 representatives.
Cochain k_c1(const Presentation& pres, const KClass& u);

/// Sum of mult * (1 - r + r exp(c1/r)); every atom must be scalar-type.
EvenClassPolynomial k_ch(const Presentation& pres, const KClass& u);

/// k_ch minus (total multiplicity) copies of the unit: the per-class constant
/// normalization dropped, which is what the kernel identities live in.
EvenClassPolynomial k_ch_reduced(const Presentation& pres, const KClass& u);

struct KernelSumReport {
    KClass eta_minus_one;
    EvenClassPolynomial ch;
    EvenClassPolynomial ch_reduced;
    bool ch_reduced_zero = false;
    bool formally_nonzero = false;
    Cochain c1;
    bool c1_class_zero = false;
};

/// eta - 1 with eta = sum_m L^{k_m,i_m}(F_m) + L^{k_0,i_0}(-sum F_m); verifies
/// the reduced Chern character vanishes and the class is formally nonzero.
KernelSumReport kernel_sum_demo(const Presentation& pres, const std::vector<Cochain>& F,
                                const std::vector<int>& ks, const std::vector<int>& is, int k0,
                                int i0);

struct KernelProductReport {
    KClass omega;
    Cochain c1;
    bool c1_class_zero = false;
    bool formally_nontrivial = false;
};

/// Tensor product of the same invertible classes; verifies c1(omega) = 0.
KernelProductReport kernel_product_demo(const Presentation& pres, const std::vector<Cochain>& F,
                                        const std::vector<int>& ks, const std::vector<int>& is,
                                        int k0, int i0);

}  // namespace lrw

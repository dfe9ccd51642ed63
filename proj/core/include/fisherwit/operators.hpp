#pragma once

// Local observables and per-party operator sets.
//
// Quadratures follow x = (a + a^dagger)/sqrt(2), p = (a - a^dagger)/(i sqrt(2)),
// so [x, p] = i and the vacuum has Var(x) = Var(p) = 1/2. All bosonic operators
// are truncated to the given Fock cutoff; the last row/column of x and p
// carries truncation artifacts.

#include "fisherwit/tensor_core.hpp"

#include <string>
#include <vector>

namespace fisherwit {

enum class Axis { X, Y, Z };

Axis parse_axis(const std::string& name);

ComplexMatrix pauli(Axis axis);
ComplexMatrix annihilation(int dim);
ComplexMatrix position(int dim);
ComplexMatrix momentum(int dim);
ComplexMatrix number(int dim);

// Offsets of each party's block inside a flattened coefficient vector.
struct BlockLayout {
    std::vector<int> offsets;
    std::vector<int> sizes;

    int total() const { return offsets.empty() ? 0 : offsets.back() + sizes.back(); }
    std::size_t parties() const { return sizes.size(); }

    friend bool operator==(const BlockLayout&, const BlockLayout&) = default;
};

class LocalOperatorSet {
public:
    // Validates Hermiticity (1e-12) and dimensions; every party needs at least
    // one operator. Missing labels are generated as "A<party>_<index>".
    LocalOperatorSet(HilbertStructure structure, std::vector<std::vector<ComplexMatrix>> operators,
                     std::vector<std::vector<std::string>> labels = {});

    const HilbertStructure& structure() const { return structure_; }
    std::size_t parties() const { return operators_.size(); }
    const std::vector<ComplexMatrix>& party(std::size_t i) const { return operators_.at(i); }
    const ComplexMatrix& op(std::size_t party, std::size_t m) const { return operators_.at(party).at(m); }
    const std::string& label(std::size_t party, std::size_t m) const { return labels_.at(party).at(m); }
    const BlockLayout& layout() const { return layout_; }

private:
    HilbertStructure structure_;
    std::vector<std::vector<ComplexMatrix>> operators_;
    std::vector<std::vector<std::string>> labels_;
    BlockLayout layout_;
};

// (sigma_x/2, sigma_y/2, sigma_z/2) on each of n qubits.
LocalOperatorSet spin_set(int parties);

// (x, p) on each mode, truncated at the given cutoffs.
LocalOperatorSet quadrature_set(const std::vector<int>& cutoffs);

LocalOperatorSet custom_set(HilbertStructure structure, std::vector<std::vector<ComplexMatrix>> operators,
                            std::vector<std::vector<std::string>> labels = {});

// Per-party real coefficient blocks c_i.
class CoefficientVector {
public:
    explicit CoefficientVector(std::vector<std::vector<double>> blocks);

    // Splits a flat vector according to `layout`.
    static CoefficientVector from_flat(const BlockLayout& layout, const RealVector& flat);

    const std::vector<std::vector<double>>& blocks() const { return blocks_; }
    const std::vector<double>& block(std::size_t i) const { return blocks_.at(i); }
    RealVector flat() const;
    double norm() const { return flat().norm(); }

    // Throws ValidationError when block lengths differ from the set's.
    void check_conformal(const LocalOperatorSet& set) const;

private:
    std::vector<std::vector<double>> blocks_;
};

// c_i . A_i for one party.
ComplexMatrix local_combination(const LocalOperatorSet& set, const CoefficientVector& c, std::size_t party);

// A(c) = sum_i c_i . A_i on the full space.
ComplexMatrix collective_generator(const LocalOperatorSet& set, const CoefficientVector& c);

}  // namespace fisherwit

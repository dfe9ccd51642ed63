#include "fisherwit/operators.hpp"

#include "fisherwit/error.hpp"

#include <cmath>

namespace fisherwit {

namespace {

constexpr Complex kI{0.0, 1.0};

void check_cutoff(int dim, const char* who) {
    if (dim < 2) throw ValidationError(std::string(who) + ": dimension must be >= 2, got " + std::to_string(dim));
}

}  // namespace

Axis parse_axis(const std::string& name) {
    if (name == "x" || name == "X") return Axis::X;
    if (name == "y" || name == "Y") return Axis::Y;
    if (name == "z" || name == "Z") return Axis::Z;
    throw ValidationError("unknown Pauli axis '" + name + "'");
}

ComplexMatrix pauli(Axis axis) {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    switch (axis) {
        case Axis::X:
            m(0, 1) = 1.0;
            m(1, 0) = 1.0;
            break;
        case Axis::Y:
            m(0, 1) = -kI;
            m(1, 0) = kI;
            break;
        case Axis::Z:
            m(0, 0) = 1.0;
            m(1, 1) = -1.0;
            break;
        default:
            throw ValidationError("invalid Pauli axis");
    }
    return m;
}

ComplexMatrix annihilation(int dim) {
    check_cutoff(dim, "annihilation");
    ComplexMatrix a = ComplexMatrix::Zero(dim, dim);
    for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
    return a;
}

ComplexMatrix position(int dim) {
    check_cutoff(dim, "position");
    const ComplexMatrix a = annihilation(dim);
    return (a + a.adjoint()) / std::sqrt(2.0);
}

ComplexMatrix momentum(int dim) {
    check_cutoff(dim, "momentum");
    const ComplexMatrix a = annihilation(dim);
    return (a - a.adjoint()) / (kI * std::sqrt(2.0));
}

ComplexMatrix number(int dim) {
    check_cutoff(dim, "number");
    ComplexMatrix n = ComplexMatrix::Zero(dim, dim);
    for (int k = 0; k < dim; ++k) n(k, k) = static_cast<double>(k);
    return n;
}

LocalOperatorSet::LocalOperatorSet(HilbertStructure structure, std::vector<std::vector<ComplexMatrix>> operators,
                                   std::vector<std::vector<std::string>> labels)
    : structure_(std::move(structure)), operators_(std::move(operators)), labels_(std::move(labels)) {
    if (operators_.size() != structure_.parties()) {
        throw ValidationError("LocalOperatorSet: " + std::to_string(operators_.size()) +
                              " operator lists for " + std::to_string(structure_.parties()) + " parties");
    }
    if (labels_.empty()) labels_.resize(operators_.size());
    if (labels_.size() != operators_.size()) throw ValidationError("LocalOperatorSet: label lists do not match parties");

    int offset = 0;
    for (std::size_t i = 0; i < operators_.size(); ++i) {
        const auto& ops = operators_[i];
        if (ops.empty()) {
            throw ValidationError("LocalOperatorSet: party " + std::to_string(i) + " has no operators");
        }
        const int d = structure_.dim(i);
        for (std::size_t m = 0; m < ops.size(); ++m) {
            const std::string where = "party " + std::to_string(i) + " operator " + std::to_string(m);
            if (ops[m].rows() != d || ops[m].cols() != d) {
                throw ValidationError("LocalOperatorSet: " + where + " has side " + std::to_string(ops[m].rows()) +
                                      ", expected " + std::to_string(d));
            }
            if (!is_hermitian(ops[m], tol::kHermitian)) {
                throw ValidationError("LocalOperatorSet: " + where + " is not Hermitian");
            }
        }
        auto& names = labels_[i];
        if (names.empty()) {
            for (std::size_t m = 0; m < ops.size(); ++m) {
                names.push_back("A" + std::to_string(i) + "_" + std::to_string(m));
            }
        }
        if (names.size() != ops.size()) {
            throw ValidationError("LocalOperatorSet: party " + std::to_string(i) + " has " +
                                  std::to_string(names.size()) + " labels for " + std::to_string(ops.size()) +
                                  " operators");
        }
        layout_.offsets.push_back(offset);
        layout_.sizes.push_back(static_cast<int>(ops.size()));
        offset += static_cast<int>(ops.size());
    }
}

LocalOperatorSet spin_set(int parties) {
    if (parties < 1) throw ValidationError("spin_set: need at least one party");
    std::vector<std::vector<ComplexMatrix>> ops;
    std::vector<std::vector<std::string>> labels;
    for (int i = 0; i < parties; ++i) {
        ops.push_back({pauli(Axis::X) / 2.0, pauli(Axis::Y) / 2.0, pauli(Axis::Z) / 2.0});
        const auto n = std::to_string(i);
        labels.push_back({"sx" + n + "/2", "sy" + n + "/2", "sz" + n + "/2"});
    }
    return LocalOperatorSet(HilbertStructure(std::vector<int>(static_cast<std::size_t>(parties), 2)),
                            std::move(ops), std::move(labels));
}

LocalOperatorSet quadrature_set(const std::vector<int>& cutoffs) {
    if (cutoffs.empty()) throw ValidationError("quadrature_set: need at least one mode");
    std::vector<std::vector<ComplexMatrix>> ops;
    std::vector<std::vector<std::string>> labels;
    for (std::size_t i = 0; i < cutoffs.size(); ++i) {
        ops.push_back({position(cutoffs[i]), momentum(cutoffs[i])});
        const auto n = std::to_string(i);
        labels.push_back({"x" + n, "p" + n});
    }
    return LocalOperatorSet(HilbertStructure(cutoffs), std::move(ops), std::move(labels));
}

LocalOperatorSet custom_set(HilbertStructure structure, std::vector<std::vector<ComplexMatrix>> operators,
                            std::vector<std::vector<std::string>> labels) {
    return LocalOperatorSet(std::move(structure), std::move(operators), std::move(labels));
}

CoefficientVector::CoefficientVector(std::vector<std::vector<double>> blocks) : blocks_(std::move(blocks)) {
    if (blocks_.empty()) throw ValidationError("CoefficientVector: no blocks");
    bool nonzero = false;
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        if (blocks_[i].empty()) throw ValidationError("CoefficientVector: block " + std::to_string(i) + " is empty");
        for (double v : blocks_[i]) {
            if (!std::isfinite(v)) throw ValidationError("CoefficientVector: non-finite entry");
            nonzero = nonzero || v != 0.0;
        }
    }
    if (!nonzero) throw ValidationError("CoefficientVector: all entries are zero");
}

CoefficientVector CoefficientVector::from_flat(const BlockLayout& layout, const RealVector& flat) {
    if (flat.size() != layout.total()) {
        throw ValidationError("CoefficientVector: flat vector has " + std::to_string(flat.size()) +
                              " entries, layout expects " + std::to_string(layout.total()));
    }
    std::vector<std::vector<double>> blocks;
    for (std::size_t i = 0; i < layout.parties(); ++i) {
        const auto seg = flat.segment(layout.offsets[i], layout.sizes[i]);
        blocks.emplace_back(seg.begin(), seg.end());
    }
    return CoefficientVector(std::move(blocks));
}

RealVector CoefficientVector::flat() const {
    std::size_t n = 0;
    for (const auto& b : blocks_) n += b.size();
    RealVector out(static_cast<Eigen::Index>(n));
    Eigen::Index at = 0;
    for (const auto& b : blocks_) {
        for (double v : b) out[at++] = v;
    }
    return out;
}

void CoefficientVector::check_conformal(const LocalOperatorSet& set) const {
    if (blocks_.size() != set.parties()) {
        throw ValidationError("coefficients have " + std::to_string(blocks_.size()) + " blocks for " +
                              std::to_string(set.parties()) + " parties");
    }
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        if (blocks_[i].size() != set.party(i).size()) {
            throw ValidationError("coefficient block " + std::to_string(i) + " has length " +
                                  std::to_string(blocks_[i].size()) + ", operator set has " +
                                  std::to_string(set.party(i).size()));
        }
    }
}

ComplexMatrix local_combination(const LocalOperatorSet& set, const CoefficientVector& c, std::size_t party) {
    c.check_conformal(set);
    const auto& ops = set.party(party);
    ComplexMatrix out = ComplexMatrix::Zero(ops.front().rows(), ops.front().cols());
    for (std::size_t m = 0; m < ops.size(); ++m) out += c.block(party)[m] * ops[m];
    return out;
}

ComplexMatrix collective_generator(const LocalOperatorSet& set, const CoefficientVector& c) {
    c.check_conformal(set);
    const int d = set.structure().total();
    ComplexMatrix out = ComplexMatrix::Zero(d, d);
    for (std::size_t i = 0; i < set.parties(); ++i) {
        out += kron_embed(local_combination(set, c, i), i, set.structure());
    }
    return out;
}

}  // namespace fisherwit

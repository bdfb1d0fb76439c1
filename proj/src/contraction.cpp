#include "supertrace/contraction.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numeric>

#include "supertrace/math_util.hpp"

namespace stlab {

namespace {

struct SignedPermutation {
    std::array<int, kMaxContractionBlock> map;
    double sign;
};

std::vector<SignedPermutation> permutations_with_sign(int mu) {
    std::vector<int> p(mu);
    std::iota(p.begin(), p.end(), 0);
    std::vector<SignedPermutation> out;
    do {
        SignedPermutation sp{};
        int inversions = 0;
        for (int i = 0; i < mu; ++i) {
            sp.map[i] = p[i];
            for (int j = i + 1; j < mu; ++j)
                if (p[j] < p[i]) ++inversions;
        }
        sp.sign = (inversions % 2 == 0) ? 1.0 : -1.0;
        out.push_back(sp);
    } while (std::next_permutation(p.begin(), p.end()));
    if (out.empty()) out.push_back(SignedPermutation{{}, 1.0});  // mu = 0
    return out;
}

bool curvature_is_zero(const CurvatureTensor& r) {
    for (int i = 1; i <= r.dim(); ++i)
        for (int j = 1; j <= r.dim(); ++j)
            for (int k = 1; k <= r.dim(); ++k)
                for (int l = 1; l <= r.dim(); ++l)
                    if (r(i, j, k, l) != 0.0) return false;
    return true;
}

int symbol_arity(TensorSymbol s) {
    switch (s) {
        case TensorSymbol::curvature: return 4;
        case TensorSymbol::curvature_jet: return 5;
        case TensorSymbol::second_form: return 2;
        case TensorSymbol::second_form_jet: return 3;
        case TensorSymbol::dilaton_grad: return 1;
        case TensorSymbol::dilaton_hess: return 2;
    }
    return 0;
}

double fetch(TensorSymbol sym, const TensorAssignment& data, const int* ix) {
    switch (sym) {
        case TensorSymbol::curvature:
            return (*data.curvature)(ix[0], ix[1], ix[2], ix[3]);
        case TensorSymbol::curvature_jet:
            return data.curvature->jet(ix[0], ix[1], ix[2], ix[3], ix[4]);
        case TensorSymbol::second_form:
            return data.boundary->L(ix[0], ix[1]);
        case TensorSymbol::second_form_jet:
            return data.boundary->jet(ix[0], ix[1], ix[2]);
        case TensorSymbol::dilaton_grad:
            return data.dilaton->grad(ix[0]);
        case TensorSymbol::dilaton_hess:
            return data.dilaton->hess(ix[0], ix[1]);
    }
    return 0.0;
}

void require_bound(TensorSymbol sym, const TensorAssignment& data) {
    switch (sym) {
        case TensorSymbol::curvature:
        case TensorSymbol::curvature_jet:
            if (!data.curvature) throw std::runtime_error("epsilon_contract: unbound curvature tensor");
            break;
        case TensorSymbol::second_form:
        case TensorSymbol::second_form_jet:
            if (!data.boundary) throw std::runtime_error("epsilon_contract: unbound second fundamental form");
            break;
        case TensorSymbol::dilaton_grad:
        case TensorSymbol::dilaton_hess:
            if (!data.dilaton) throw std::runtime_error("epsilon_contract: unbound dilaton jets");
            break;
    }
}

void validate_expression(const ContractionExpression& expr, const TensorAssignment& data) {
    const int mu = expr.block_size;
    if (mu < 0) throw std::invalid_argument("epsilon_contract: negative block size");
    if (mu > kMaxContractionBlock)
        throw std::invalid_argument("epsilon_contract: block size exceeds capacity (mu <= 8)");
    if (mu > data.dim)
        throw std::invalid_argument("epsilon_contract: block size exceeds dimension");
    for (const auto& f : expr.factors) {
        if (static_cast<int>(f.slots.size()) != symbol_arity(f.symbol))
            throw std::invalid_argument("epsilon_contract: factor arity mismatch");
        require_bound(f.symbol, data);
        for (const auto& s : f.slots) {
            switch (s.kind) {
                case IndexSlot::eps_upper:
                case IndexSlot::eps_lower:
                    if (s.id < 0 || s.id >= mu)
                        throw std::invalid_argument("epsilon_contract: epsilon slot out of range");
                    break;
                case IndexSlot::dummy:
                    if (s.id < 0 || s.id >= expr.dummy_count)
                        throw std::invalid_argument("epsilon_contract: dummy id out of range");
                    break;
                case IndexSlot::fixed:
                    if (s.id < 1) throw std::invalid_argument("epsilon_contract: bad fixed index");
                    break;
            }
        }
    }
}

// Core permutation double-sum over one fully bound factor list.
double contract_bound(const ContractionExpression& expr, const TensorAssignment& data) {
    const int mu = expr.block_size;
    const auto perms = permutations_with_sign(mu);

    // enumerate sorted mu-subsets of {1..dim}
    std::vector<int> subset(mu);
    std::iota(subset.begin(), subset.end(), 1);

    std::vector<double> partials;
    partials.reserve(perms.size());

    std::array<int, 5> ix{};
    std::vector<int> dummy_val(std::max(expr.dummy_count, 1), 1);

    bool more_subsets = true;
    while (more_subsets) {
        for (const auto& upper : perms) {
            double upper_partial = 0.0;
            for (const auto& lower : perms) {
                // dummy odometer
                std::fill(dummy_val.begin(), dummy_val.end(), 1);
                double dummy_sum = 0.0;
                bool more_dummies = true;
                while (more_dummies) {
                    double prod = 1.0;
                    for (const auto& f : expr.factors) {
                        for (std::size_t s = 0; s < f.slots.size(); ++s) {
                            const IndexSlot& slot = f.slots[s];
                            switch (slot.kind) {
                                case IndexSlot::eps_upper: ix[s] = subset[upper.map[slot.id]]; break;
                                case IndexSlot::eps_lower: ix[s] = subset[lower.map[slot.id]]; break;
                                case IndexSlot::dummy: ix[s] = dummy_val[slot.id]; break;
                                case IndexSlot::fixed: ix[s] = slot.id; break;
                            }
                        }
                        prod *= fetch(f.symbol, data, ix.data());
                        if (prod == 0.0) break;
                    }
                    dummy_sum += prod;
                    if (expr.dummy_count == 0) break;
                    int d = 0;
                    while (d < expr.dummy_count && ++dummy_val[d] > data.dim) {
                        dummy_val[d] = 1;
                        ++d;
                    }
                    more_dummies = d < expr.dummy_count;
                }
                upper_partial += upper.sign * lower.sign * dummy_sum;
            }
            partials.push_back(upper_partial);
        }
        // next subset in lexicographic order
        more_subsets = false;
        for (int i = mu - 1; i >= 0; --i) {
            if (subset[i] < data.dim - (mu - 1 - i)) {
                ++subset[i];
                for (int j = i + 1; j < mu; ++j) subset[j] = subset[j - 1] + 1;
                more_subsets = true;
                break;
            }
        }
    }
    return pairwise_sum(partials);
}

TensorSymbol jet_symbol(TensorSymbol s) {
    switch (s) {
        case TensorSymbol::curvature: return TensorSymbol::curvature_jet;
        case TensorSymbol::second_form: return TensorSymbol::second_form_jet;
        case TensorSymbol::dilaton_grad: return TensorSymbol::dilaton_hess;
        default:
            throw std::runtime_error("divergence_eval: factor cannot be differentiated again");
    }
}

// check that differentiating this factor is backed by data (or vanishes)
void require_jet(TensorSymbol s, const TensorAssignment& data) {
    switch (s) {
        case TensorSymbol::curvature:
            if (data.curvature && !data.curvature->has_jets() && !curvature_is_zero(*data.curvature))
                throw std::runtime_error("divergence_eval: curvature first jets missing");
            break;
        case TensorSymbol::second_form:
            if (data.boundary && !data.boundary->has_jets() && data.boundary->square_norm() != 0.0)
                throw std::runtime_error("divergence_eval: second fundamental form jets missing");
            break;
        case TensorSymbol::dilaton_grad:
            break;  // the Hessian is its jet and always stored
        default:
            throw std::runtime_error("divergence_eval: no jet data for this factor kind");
    }
}

bool jet_available(TensorSymbol s, const TensorAssignment& data) {
    switch (s) {
        case TensorSymbol::curvature: return data.curvature && data.curvature->has_jets();
        case TensorSymbol::second_form: return data.boundary && data.boundary->has_jets();
        case TensorSymbol::dilaton_grad: return data.dilaton != nullptr;
        default: return false;
    }
}

}  // namespace

double epsilon_contract(const ContractionExpression& expr, const TensorAssignment& data) {
    if (expr.divergence)
        throw std::invalid_argument("epsilon_contract: expression carries a divergence; use divergence_eval");
    validate_expression(expr, data);
    return contract_bound(expr, data);
}

double divergence_eval(const ContractionExpression& expr, const TensorAssignment& data) {
    if (!expr.divergence)
        throw std::invalid_argument("divergence_eval: expression has no divergence index");
    validate_expression(expr, data);

    double total = 0.0;
    for (std::size_t f = 0; f < expr.factors.size(); ++f) {
        require_jet(expr.factors[f].symbol, data);
        if (!jet_available(expr.factors[f].symbol, data)) continue;  // vanishing factor
        ContractionExpression term = expr;
        term.divergence.reset();
        term.factors[f].symbol = jet_symbol(expr.factors[f].symbol);
        term.factors[f].slots.push_back(*expr.divergence);
        total += contract_bound(term, data);
    }
    return total;
}

// ---------------------------------------------------------------------------
// builders

void append_curvature_chain(ContractionExpression& expr, int first, int count) {
    for (int s = 0; s < count; ++s) {
        const int p = first + 2 * s;
        expr.factors.push_back({TensorSymbol::curvature,
                                {{IndexSlot::eps_upper, p},
                                 {IndexSlot::eps_upper, p + 1},
                                 {IndexSlot::eps_lower, p + 1},
                                 {IndexSlot::eps_lower, p}}});
    }
}

void append_second_form_chain(ContractionExpression& expr, int first, int count) {
    for (int s = 0; s < count; ++s) {
        const int p = first + s;
        expr.factors.push_back({TensorSymbol::second_form,
                                {{IndexSlot::eps_upper, p}, {IndexSlot::eps_lower, p}}});
    }
}

// ---------------------------------------------------------------------------
// closed-form densities

double interior_index_prefactor(int m) {
    if (m % 2 != 0 || m < 2)
        throw std::invalid_argument("interior index density: dimension must be even and >= 2");
    const int q = m / 2;
    return 1.0 / (std::pow(M_PI, q) * std::pow(8.0, q) * factorial(q));
}

double boundary_index_prefactor(int m, int k) {
    return 1.0 / (std::pow(M_PI, k) * std::pow(8.0, k) * factorial(k) * factorial(m - 1 - 2 * k) *
                  sphere_volume(m - 1 - 2 * k));
}

double eval_interior_index_density(const CurvatureTensor& curv, int m) {
    const double pref = interior_index_prefactor(m);  // validates parity
    if (curv.dim() != m) throw std::invalid_argument("interior index density: dimension mismatch");
    ContractionExpression expr;
    expr.block_size = m;
    append_curvature_chain(expr, 0, m / 2);
    TensorAssignment data{m, &curv, nullptr, nullptr};
    return pref * epsilon_contract(expr, data);
}

double eval_boundary_index_density(const BoundaryJet& bdry, int m) {
    if (bdry.dim() != m) throw std::invalid_argument("boundary index density: dimension mismatch");
    // absent boundary curvature means the flat model: bind an explicit zero
    const CurvatureTensor flat_fallback = CurvatureTensor::zero(m);
    TensorAssignment data{m - 1, bdry.has_curvature() ? &bdry.curvature() : &flat_fallback, &bdry,
                          nullptr};
    double density = 0.0;
    for (int k = 0; m - 1 - 2 * k >= 0; ++k) {
        ContractionExpression expr;
        expr.block_size = m - 1;
        append_curvature_chain(expr, 0, k);
        append_second_form_chain(expr, 2 * k, m - 1 - 2 * k);
        density += boundary_index_prefactor(m, k) * epsilon_contract(expr, data);
    }
    return density;
}

double eval_dilaton_interior_density(const DilatonJet& dilaton, const CurvatureTensor& curv, int m) {
    if (m % 2 != 1 || m < 1)
        throw std::invalid_argument("dilaton interior density: dimension must be odd");
    if (curv.dim() != m || dilaton.dim() != m)
        throw std::invalid_argument("dilaton interior density: dimension mismatch");
    const int q = (m - 1) / 2;
    const double pref = 1.0 / (std::sqrt(M_PI) * std::pow(M_PI, q) * std::pow(8.0, q) * factorial(q));
    ContractionExpression expr;
    expr.block_size = m;
    expr.factors.push_back({TensorSymbol::dilaton_hess,
                            {{IndexSlot::eps_upper, 0}, {IndexSlot::eps_lower, 0}}});
    append_curvature_chain(expr, 1, q);
    TensorAssignment data{m, &curv, nullptr, &dilaton};
    return pref * epsilon_contract(expr, data);
}

SupertraceCoefficients universal_constants(int m) {
    if (m < 1) throw std::invalid_argument("universal_constants: m must be >= 1");
    SupertraceCoefficients table;
    table.m = m;
    if (m % 2 == 1) {
        const int q = (m - 1) / 2;
        table.interior = 1.0 / (std::sqrt(M_PI) * std::pow(8.0, q) * std::pow(M_PI, q) * factorial(q));
    }
    for (int k = 0; 2 * k <= m - 1; ++k)
        table.boundary_first.push_back(std::sqrt(M_PI) /
                                       (std::pow(8.0, k) * std::pow(M_PI, k) * factorial(k) *
                                        sphere_volume(m - 2 * k) * factorial(m - 2 * k)));
    for (int k = 0; 2 * k <= m - 2; ++k) {
        table.boundary_hess.push_back(1.0 / (std::sqrt(M_PI) * std::pow(M_PI, k) * std::pow(8.0, k) *
                                             factorial(k) * sphere_volume(m - 2 * k - 2) *
                                             factorial(m - 2 * k - 2)));
        table.boundary_grad2.push_back(0.0);
    }
    for (int k = 0; 2 * k <= m - 3; ++k) {
        if (2 * k == m - 3) {
            table.boundary_div.push_back(0.0);
        } else {
            table.boundary_div.push_back(1.0 / (2.0 * std::sqrt(M_PI) * std::pow(M_PI, k) *
                                                std::pow(8.0, k) * factorial(k) *
                                                sphere_volume(m - 2 * k - 2) * factorial(m - 2 * k - 2)));
        }
    }
    return table;
}

BoundaryDilatonDensities eval_dilaton_boundary_densities(const DilatonJet* dilaton,
                                                         const BoundaryJet& bdry, int m) {
    if (bdry.dim() != m)
        throw std::invalid_argument("dilaton boundary densities: dimension mismatch");
    if (dilaton && dilaton->dim() != m)
        throw std::invalid_argument("dilaton boundary densities: dilaton dimension mismatch");
    const SupertraceCoefficients table = universal_constants(m);
    const CurvatureTensor flat_fallback = CurvatureTensor::zero(m);
    const DilatonJet no_dilaton = DilatonJet::zero(m);
    TensorAssignment data{m - 1, bdry.has_curvature() ? &bdry.curvature() : &flat_fallback, &bdry,
                          dilaton ? dilaton : &no_dilaton};

    BoundaryDilatonDensities out;

    for (int k = 0; 2 * k <= m - 1; ++k) {
        ContractionExpression expr;
        expr.block_size = m - 1;
        append_curvature_chain(expr, 0, k);
        append_second_form_chain(expr, 2 * k, m - 1 - 2 * k);
        out.first += table.boundary_first[k] * epsilon_contract(expr, data);
    }

    for (int k = 0; 2 * k <= m - 2; ++k) {
        ContractionExpression expr;
        expr.block_size = m - 1;
        append_curvature_chain(expr, 0, k);
        expr.factors.push_back({TensorSymbol::dilaton_hess,
                                {{IndexSlot::eps_upper, 2 * k}, {IndexSlot::eps_lower, 2 * k}}});
        append_second_form_chain(expr, 2 * k + 1, m - 2 - 2 * k);
        out.zeroth += table.boundary_hess[k] * epsilon_contract(expr, data);
    }

    for (int k = 0; 2 * k < m - 3; ++k) {
        ContractionExpression expr;
        expr.block_size = m - 1;
        append_curvature_chain(expr, 0, k);
        expr.factors.push_back({TensorSymbol::curvature,
                                {{IndexSlot::eps_upper, 2 * k},
                                 {IndexSlot::eps_upper, 2 * k + 1},
                                 {IndexSlot::eps_lower, 2 * k + 1},
                                 {IndexSlot::fixed, m}}});
        append_second_form_chain(expr, 2 * k + 2, m - 3 - 2 * k);
        expr.divergence = IndexSlot{IndexSlot::eps_lower, 2 * k};
        out.zeroth += table.boundary_div[k] * divergence_eval(expr, data);
    }

    return out;
}

}  // namespace stlab

#include "supertrace/tensor_data.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace stlab {

namespace {
constexpr double kSymTol = 1e-12;
constexpr double kCodazziTol = 1e-10;

void check_dim(int m, const char* what) {
    if (m < 0 || m > 12) throw std::invalid_argument(std::string(what) + ": dimension out of range [0, 12]");
}
}  // namespace

// ---------------------------------------------------------------------------
// CurvatureTensor

CurvatureTensor::CurvatureTensor(int m, std::vector<double> components,
                                 std::optional<std::vector<double>> first_jets)
    : m_(m), r_(std::move(components)), jets_(std::move(first_jets)) {
    check_dim(m, "CurvatureTensor");
    const std::size_t n4 = static_cast<std::size_t>(m) * m * m * m;
    if (r_.size() != n4) throw std::invalid_argument("CurvatureTensor: expected m^4 components");
    if (jets_ && jets_->size() != n4 * m)
        throw std::invalid_argument("CurvatureTensor: expected m^5 jet components");
    validate();
}

CurvatureTensor CurvatureTensor::zero(int m) {
    check_dim(m, "CurvatureTensor");
    return CurvatureTensor(m, std::vector<double>(static_cast<std::size_t>(m) * m * m * m, 0.0));
}

std::size_t CurvatureTensor::idx4(int i, int j, int k, int l) const {
    return ((static_cast<std::size_t>(i - 1) * m_ + (j - 1)) * m_ + (k - 1)) * m_ + (l - 1);
}

double CurvatureTensor::jet(int i, int j, int k, int l, int n) const {
    if (!jets_) throw std::runtime_error("CurvatureTensor: first jets not supplied");
    return (*jets_)[idx4(i, j, k, l) * m_ + (n - 1)];
}

double CurvatureTensor::scalar_curvature() const {
    double tau = 0.0;
    for (int i = 1; i <= m_; ++i)
        for (int j = 1; j <= m_; ++j) tau += (*this)(i, j, j, i);
    return tau;
}

double CurvatureTensor::normal_sectional_sum() const {
    double s = 0.0;
    for (int a = 1; a < m_; ++a) s += (*this)(a, m_, a, m_);
    return s;
}

void CurvatureTensor::validate() const {
    for (int i = 1; i <= m_; ++i)
        for (int j = 1; j <= m_; ++j)
            for (int k = 1; k <= m_; ++k)
                for (int l = 1; l <= m_; ++l) {
                    const double v = (*this)(i, j, k, l);
                    if (std::abs(v + (*this)(j, i, k, l)) > kSymTol)
                        throw TensorValidationError("curvature antisymmetry in (i,j) violated");
                    if (std::abs(v + (*this)(i, j, l, k)) > kSymTol)
                        throw TensorValidationError("curvature antisymmetry in (k,l) violated");
                    if (std::abs(v - (*this)(k, l, i, j)) > kSymTol)
                        throw TensorValidationError("curvature pair symmetry violated");
                    const double bianchi = v + (*this)(j, k, i, l) + (*this)(k, i, j, l);
                    if (std::abs(bianchi) > kSymTol)
                        throw TensorValidationError("curvature first Bianchi identity violated");
                }
    if (!jets_) return;
    for (int n = 1; n <= m_; ++n)
        for (int i = 1; i <= m_; ++i)
            for (int j = 1; j <= m_; ++j)
                for (int k = 1; k <= m_; ++k)
                    for (int l = 1; l <= m_; ++l) {
                        const double v = jet(i, j, k, l, n);
                        if (std::abs(v + jet(j, i, k, l, n)) > kSymTol)
                            throw TensorValidationError("curvature jet antisymmetry in (i,j) violated");
                        if (std::abs(v + jet(i, j, l, k, n)) > kSymTol)
                            throw TensorValidationError("curvature jet antisymmetry in (k,l) violated");
                        if (std::abs(v - jet(k, l, i, j, n)) > kSymTol)
                            throw TensorValidationError("curvature jet pair symmetry violated");
                        if (std::abs(v + jet(j, k, i, l, n) + jet(k, i, j, l, n)) > kSymTol)
                            throw TensorValidationError("curvature jet first Bianchi identity violated");
                        if (std::abs(v + jet(i, j, l, n, k) + jet(i, j, n, k, l)) > kSymTol)
                            throw TensorValidationError("curvature jet second Bianchi identity violated");
                    }
}

// ---------------------------------------------------------------------------
// BoundaryJet

BoundaryJet::BoundaryJet(int m, std::vector<double> second_form,
                         std::optional<std::vector<double>> tangential_jets,
                         std::optional<CurvatureTensor> ambient_curvature)
    : m_(m), l_(std::move(second_form)), jets_(std::move(tangential_jets)),
      curvature_(std::move(ambient_curvature)) {
    if (m < 1) throw std::invalid_argument("BoundaryJet: ambient dimension must be >= 1");
    check_dim(m, "BoundaryJet");
    const std::size_t q = static_cast<std::size_t>(m - 1);
    if (l_.size() != q * q) throw std::invalid_argument("BoundaryJet: expected (m-1)^2 components");
    if (jets_ && jets_->size() != q * q * q)
        throw std::invalid_argument("BoundaryJet: expected (m-1)^3 jet components");
    if (curvature_ && curvature_->dim() != m)
        throw std::invalid_argument("BoundaryJet: ambient curvature must have dimension m");
    validate();
}

BoundaryJet BoundaryJet::flat(int m) {
    const std::size_t q = static_cast<std::size_t>(m - 1);
    return BoundaryJet(m, std::vector<double>(q * q, 0.0), std::nullopt, CurvatureTensor::zero(m));
}

double BoundaryJet::jet(int a, int b, int c) const {
    if (!jets_) throw std::runtime_error("BoundaryJet: tangential jets not supplied");
    const int q = m_ - 1;
    return (*jets_)[((a - 1) * q + (b - 1)) * static_cast<std::size_t>(q) + (c - 1)];
}

const CurvatureTensor& BoundaryJet::curvature() const {
    if (!curvature_) throw std::runtime_error("BoundaryJet: ambient curvature not supplied");
    return *curvature_;
}

double BoundaryJet::trace() const {
    double t = 0.0;
    for (int a = 1; a < m_; ++a) t += L(a, a);
    return t;
}

double BoundaryJet::square_norm() const {
    double t = 0.0;
    for (int a = 1; a < m_; ++a)
        for (int b = 1; b < m_; ++b) t += L(a, b) * L(a, b);
    return t;
}

void BoundaryJet::validate() const {
    for (int a = 1; a < m_; ++a)
        for (int b = 1; b < m_; ++b)
            if (std::abs(L(a, b) - L(b, a)) > kSymTol)
                throw TensorValidationError("second fundamental form symmetry violated");
    if (jets_) {
        for (int a = 1; a < m_; ++a)
            for (int b = 1; b < m_; ++b)
                for (int c = 1; c < m_; ++c)
                    if (std::abs(jet(a, b, c) - jet(b, a, c)) > kSymTol)
                        throw TensorValidationError("second fundamental form jet symmetry violated");
    }
    if (jets_ && curvature_) {
        // L_{c2 c3 : c1} - L_{c1 c3 : c2} = R_{c1 c2 c3 m}
        for (int c1 = 1; c1 < m_; ++c1)
            for (int c2 = 1; c2 < m_; ++c2)
                for (int c3 = 1; c3 < m_; ++c3) {
                    const double lhs = jet(c2, c3, c1) - jet(c1, c3, c2);
                    const double rhs = (*curvature_)(c1, c2, c3, m_);
                    if (std::abs(lhs - rhs) > kCodazziTol)
                        throw TensorValidationError("Codazzi relation violated");
                }
    }
}

// ---------------------------------------------------------------------------
// DilatonJet

DilatonJet::DilatonJet(int m, std::vector<double> gradient, std::vector<double> hessian)
    : m_(m), grad_(std::move(gradient)), hess_(std::move(hessian)) {
    check_dim(m, "DilatonJet");
    if (grad_.size() != static_cast<std::size_t>(m))
        throw std::invalid_argument("DilatonJet: expected m gradient components");
    if (hess_.size() != static_cast<std::size_t>(m) * m)
        throw std::invalid_argument("DilatonJet: expected m^2 Hessian components");
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j)
            if (std::abs(hess(i, j) - hess(j, i)) > kSymTol)
                throw TensorValidationError("dilaton Hessian symmetry violated");
}

DilatonJet DilatonJet::zero(int m) {
    return DilatonJet(m, std::vector<double>(m, 0.0), std::vector<double>(static_cast<std::size_t>(m) * m, 0.0));
}

double DilatonJet::grad_square() const {
    double s = 0.0;
    for (double g : grad_) s += g * g;
    return s;
}

DilatonJet DilatonJet::operator-() const {
    std::vector<double> g(grad_), h(hess_);
    for (double& v : g) v = -v;
    for (double& v : h) v = -v;
    return DilatonJet(m_, std::move(g), std::move(h));
}

// ---------------------------------------------------------------------------
// JSON input

namespace {

using nlohmann::json;

void flatten(const json& node, int depth, int rank, int extent, std::vector<double>& out,
             const char* field) {
    if (depth == rank) {
        if (!node.is_number())
            throw std::invalid_argument(std::string("tensor file: ") + field + ": expected number");
        out.push_back(node.get<double>());
        return;
    }
    if (!node.is_array() || static_cast<int>(node.size()) != extent)
        throw std::invalid_argument(std::string("tensor file: ") + field +
                                    ": expected nested arrays of extent " + std::to_string(extent));
    for (const auto& child : node) flatten(child, depth + 1, rank, extent, out, field);
}

std::vector<double> read_tensor(const json& j, const char* field, int rank, int extent) {
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(std::pow(extent, rank)));
    flatten(j.at(field), 0, rank, extent, out, field);
    return out;
}

}  // namespace

TensorBundle load_tensor_bundle_json(const std::string& json_text) {
    json j = json::parse(json_text);
    if (!j.contains("dim")) throw std::invalid_argument("tensor file: missing field 'dim'");
    const int m = j.at("dim").get<int>();
    check_dim(m, "tensor file");

    TensorBundle bundle;
    bundle.dim = m;

    if (j.contains("R")) {
        std::optional<std::vector<double>> dr;
        if (j.contains("dR")) dr = read_tensor(j, "dR", 5, m);
        bundle.curvature = CurvatureTensor(m, read_tensor(j, "R", 4, m), std::move(dr));
    } else if (j.contains("dR")) {
        throw std::invalid_argument("tensor file: 'dR' supplied without 'R'");
    }

    if (j.contains("L")) {
        std::optional<std::vector<double>> dl;
        if (j.contains("dL")) dl = read_tensor(j, "dL", 3, m - 1);
        bundle.boundary = BoundaryJet(m, read_tensor(j, "L", 2, m - 1), std::move(dl), bundle.curvature);
    } else if (j.contains("dL")) {
        throw std::invalid_argument("tensor file: 'dL' supplied without 'L'");
    }

    if (j.contains("phi_grad") || j.contains("phi_hess")) {
        std::vector<double> grad(m, 0.0), hess(static_cast<std::size_t>(m) * m, 0.0);
        if (j.contains("phi_grad")) grad = read_tensor(j, "phi_grad", 1, m);
        if (j.contains("phi_hess")) hess = read_tensor(j, "phi_hess", 2, m);
        bundle.dilaton = DilatonJet(m, std::move(grad), std::move(hess));
    }
    return bundle;
}

TensorBundle load_tensor_bundle_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open tensor file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return load_tensor_bundle_json(ss.str());
}

}  // namespace stlab

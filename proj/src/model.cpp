#include "fdt/model.hpp"

#include "fdt/error.hpp"

#include <algorithm>
#include <sstream>

namespace fdt {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, std::vector<Polynomial> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (entries_.size() != rows_ * cols_) throw Error("dimension mismatch");
}

bool PolyMatrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

std::size_t PolyMatrix::max_degree() const {
    std::size_t d = 0;
    for (const auto& p : entries_) d = std::max(d, p.degree());
    return d;
}

namespace {

std::string shape(std::size_t r, std::size_t c) {
    std::ostringstream os;
    os << r << "x" << c;
    return os.str();
}

void check_matrix(const PolyMatrix& M, const std::string& name, std::size_t rows, std::size_t cols,
                  std::vector<std::string>& out) {
    if (M.rows() != rows || M.cols() != cols)
        out.push_back("dimension mismatch: " + name + " is " + shape(M.rows(), M.cols()) + ", expected " +
                      shape(rows, cols));
}

} // namespace

std::vector<std::string> validate(const DelaySystem& sys) {
    std::vector<std::string> out;
    if (!(sys.nu.is_positive() && sys.nu <= Rational(1))) out.push_back("ν out of (0,1]: nu = " + sys.nu.str());
    if (sys.n == 0) out.push_back("state dimension must be positive");
    if (sys.m == 0) out.push_back("control dimension must be positive");
    if (!sys.horizon.is_positive()) out.push_back("horizon must be positive");

    for (std::size_t i = 0; i < sys.delays.size(); ++i) {
        if (!sys.delays[i].is_positive()) out.push_back("delay " + std::to_string(i + 1) + " must be positive");
        if (i > 0 && !(sys.delays[i - 1] < sys.delays[i])) {
            out.push_back("delays not increasing");
            break;
        }
    }

    if (sys.A.size() != sys.delays.size() + 1)
        out.push_back("dimension mismatch: expected " + std::to_string(sys.delays.size() + 1) +
                      " coefficient matrices A0..A" + std::to_string(sys.delays.size()) + ", got " +
                      std::to_string(sys.A.size()));
    for (std::size_t i = 0; i < sys.A.size(); ++i) check_matrix(sys.A[i], "A" + std::to_string(i), sys.n, sys.n, out);
    check_matrix(sys.B, "B", sys.n, sys.m, out);
    if (sys.u.size() != sys.m)
        out.push_back("dimension mismatch: u has " + std::to_string(sys.u.size()) + " components, expected " +
                      std::to_string(sys.m));
    if (sys.phi.size() != sys.n)
        out.push_back("dimension mismatch: phi has " + std::to_string(sys.phi.size()) + " components, expected " +
                      std::to_string(sys.n));
    return out;
}

std::vector<std::string> validate(const SolverConfig& cfg) {
    std::vector<std::string> out;
    if (cfg.K <= 0) out.push_back("K must be a positive integer");
    if (!cfg.sample_step.is_positive()) out.push_back("sample_step must be positive");
    return out;
}

} // namespace fdt

#include "gpelab/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <iostream>
#include <map>
#include <mutex>
#include <numbers>
#include <string>
#include <tuple>

#include "gpelab/errors.hpp"

namespace gpelab {

namespace {

std::mutex& sink_mutex() {
    static std::mutex m;
    return m;
}

WarningSink& sink() {
    static WarningSink s = [](const std::string& msg) { std::cerr << "warning: " << msg << '\n'; };
    return s;
}

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

// FFTW plans are created once per (dim, n, sign) and executed with the
// new-array interface, which is thread-safe. Planning itself is serialized.
class PlanCache {
public:
    static PlanCache& instance() {
        static PlanCache cache;
        return cache;
    }

    fftw_plan get(int dim, int n, int sign) {
        std::lock_guard lock(mutex_);
        auto key = std::make_tuple(dim, n, sign);
        if (auto it = plans_.find(key); it != plans_.end()) return it->second;
        std::size_t total = 1;
        for (int a = 0; a < dim; ++a) total *= static_cast<std::size_t>(n);
        std::vector<Complex> scratch(total);
        auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
        std::array<int, 3> dims{n, n, n};
        fftw_plan plan = fftw_plan_dft(dim, dims.data(), buf, buf, sign,
                                       FFTW_ESTIMATE | FFTW_UNALIGNED);
        plans_.emplace(key, plan);
        return plan;
    }

    ~PlanCache() {
        for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
    }

private:
    std::mutex mutex_;
    std::map<std::tuple<int, int, int>, fftw_plan> plans_;
};

void execute(const Grid& g, std::span<Complex> data, int sign) {
    if (data.size() != g.size()) throw ContractViolation("transform buffer size differs from the grid size");
    fftw_plan plan = PlanCache::instance().get(g.dim(), g.n(), sign);
    auto* buf = reinterpret_cast<fftw_complex*>(data.data());
    fftw_execute_dft(plan, buf, buf);
}

double bracket(double xi_sq) { return 1.0 + xi_sq; }

}  // namespace

void set_warning_sink(WarningSink s) {
    std::lock_guard lock(sink_mutex());
    sink() = std::move(s);
}

void warn(const std::string& message) {
    std::lock_guard lock(sink_mutex());
    if (sink()) sink()(message);
}

// ---------------------------------------------------------------- Grid

Grid::Grid(int dim, int n, double length) : dim_(dim), n_(n), length_(length), size_(1) {
    if (dim < 1 || dim > 3) throw DomainError("grid dimension must be 1, 2 or 3");
    if (n < 8 || !is_power_of_two(n)) throw DomainError("points per axis must be a power of two >= 8");
    if (!(length > 0.0) || !std::isfinite(length)) throw DomainError("box length must be positive");
    for (int a = 0; a < dim; ++a) size_ *= static_cast<std::size_t>(n);
}

double Grid::cell_volume() const noexcept { return std::pow(spacing(), dim_); }
double Grid::volume() const noexcept { return std::pow(length_, dim_); }
double Grid::frequency_unit() const noexcept { return 2.0 * std::numbers::pi / length_; }

std::array<int, 3> Grid::multi_index(std::size_t flat) const noexcept {
    std::array<int, 3> idx{0, 0, 0};
    for (int a = dim_ - 1; a >= 0; --a) {
        idx[a] = static_cast<int>(flat % static_cast<std::size_t>(n_));
        flat /= static_cast<std::size_t>(n_);
    }
    return idx;
}

Vec3 Grid::frequency(std::size_t flat) const noexcept {
    const auto idx = multi_index(flat);
    const double unit = frequency_unit();
    Vec3 xi{0.0, 0.0, 0.0};
    for (int a = 0; a < dim_; ++a) xi[a] = unit * wavenumber(idx[a]);
    return xi;
}

double Grid::frequency_norm(std::size_t flat) const noexcept {
    const Vec3 xi = frequency(flat);
    return std::sqrt(xi[0] * xi[0] + xi[1] * xi[1] + xi[2] * xi[2]);
}

Vec3 Grid::position(std::size_t flat) const noexcept {
    const auto idx = multi_index(flat);
    Vec3 x{0.0, 0.0, 0.0};
    for (int a = 0; a < dim_; ++a) x[a] = spacing() * idx[a];
    return x;
}

double Grid::max_frequency() const noexcept {
    return frequency_unit() * (n_ / 2) * std::sqrt(static_cast<double>(dim_));
}

bool Grid::is_nyquist(std::size_t flat) const noexcept {
    const auto idx = multi_index(flat);
    for (int a = 0; a < dim_; ++a)
        if (idx[a] == n_ / 2) return true;
    return false;
}

// ---------------------------------------------------------------- Field

Field::Field(const Grid& grid, Representation rep)
    : grid_(grid), rep_(rep), values_(grid.size(), Complex{0.0, 0.0}) {}

Field::Field(const Grid& grid, Representation rep, std::vector<Complex> values)
    : grid_(grid), rep_(rep), values_(std::move(values)) {
    if (values_.size() != grid_.size()) throw ContractViolation("field size does not match grid");
}

namespace {
void require_compatible(const Field& a, const Field& b) {
    if (!(a.grid() == b.grid())) throw ContractViolation("fields live on different grids");
    if (a.representation() != b.representation())
        throw ContractViolation("fields are in different representations");
}
}  // namespace

Field& Field::operator+=(const Field& other) {
    require_compatible(*this, other);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += other.values_[i];
    return *this;
}

Field& Field::operator-=(const Field& other) {
    require_compatible(*this, other);
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= other.values_[i];
    return *this;
}

Field& Field::operator*=(Complex scale) {
    for (auto& v : values_) v *= scale;
    return *this;
}

Field operator+(Field a, const Field& b) { return a += b; }
Field operator-(Field a, const Field& b) { return a -= b; }
Field operator*(Complex scale, Field a) { return a *= scale; }

// ---------------------------------------------------------------- transforms

Field forward_transform(const Field& f) {
    if (!f.is_physical()) throw ContractViolation("forward_transform expects a Physical field");
    const Grid& g = f.grid();
    std::vector<Complex> data(f.values().begin(), f.values().end());
    execute(g, data, FFTW_FORWARD);
    const double scale = std::pow(g.length(), 0.5 * g.dim()) / static_cast<double>(g.size());
    for (auto& v : data) v *= scale;
    return Field(g, Representation::Spectral, std::move(data));
}

Field inverse_transform(const Field& f) {
    if (f.is_physical()) throw ContractViolation("inverse_transform expects a Spectral field");
    const Grid& g = f.grid();
    std::vector<Complex> data(f.values().begin(), f.values().end());
    execute(g, data, FFTW_BACKWARD);
    const double scale = std::pow(g.length(), -0.5 * g.dim());
    for (auto& v : data) v *= scale;
    return Field(g, Representation::Physical, std::move(data));
}

void forward_transform_inplace(const Grid& g, std::span<Complex> data) {
    execute(g, data, FFTW_FORWARD);
    const double scale = std::pow(g.length(), 0.5 * g.dim()) / static_cast<double>(g.size());
    for (auto& v : data) v *= scale;
}

void inverse_transform_inplace(const Grid& g, std::span<Complex> data) {
    execute(g, data, FFTW_BACKWARD);
    const double scale = std::pow(g.length(), -0.5 * g.dim());
    for (auto& v : data) v *= scale;
}

Field to_physical(const Field& f) { return f.is_physical() ? f : inverse_transform(f); }
Field to_spectral(const Field& f) { return f.is_physical() ? forward_transform(f) : f; }

// ---------------------------------------------------------------- norms

double sobolev_norm(const Field& f, double s) {
    const Field c = to_spectral(f);
    const Grid& g = c.grid();
    double acc = 0.0;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const double xn = g.frequency_norm(i);
        acc += std::pow(bracket(xn * xn), s) * std::norm(c[i]);
    }
    return std::sqrt(acc);
}

double homogeneous_norm(const Field& f, double s) {
    const Field c = to_spectral(f);
    const Grid& g = c.grid();
    if (s < 0.0) {
        double total = 0.0;
        for (std::size_t i = 0; i < g.size(); ++i) total += std::norm(c[i]);
        if (std::norm(c[0]) > 1e-14 * total)
            throw DegenerateInput("homogeneous norm with s < 0 needs a vanishing zero mode");
    }
    double acc = 0.0;
    for (std::size_t i = 1; i < g.size(); ++i)
        acc += std::pow(g.frequency_norm(i), 2.0 * s) * std::norm(c[i]);
    return std::sqrt(acc);
}

double lp_norm(const Field& f, double p) {
    if (!f.is_physical()) throw ContractViolation("lp_norm expects a Physical field");
    if (!(p >= 1.0)) throw DomainError("lp_norm needs p >= 1");
    if (std::isinf(p)) {
        double m = 0.0;
        for (const auto& v : f.values()) m = std::max(m, std::abs(v));
        return m;
    }
    double acc = 0.0;
    if (p == 2.0) {
        for (const auto& v : f.values()) acc += std::norm(v);
    } else {
        for (const auto& v : f.values()) acc += std::pow(std::abs(v), p);
    }
    return std::pow(acc * f.grid().cell_volume(), 1.0 / p);
}

double integrate(const Field& f, double (*density)(Complex)) {
    if (!f.is_physical()) throw ContractViolation("integrate expects a Physical field");
    double acc = 0.0;
    for (const auto& v : f.values()) acc += density(v);
    return acc * f.grid().cell_volume();
}

Complex spectral_inner(const Field& a, const Field& b) {
    const Field ca = to_spectral(a);
    const Field cb = to_spectral(b);
    if (!(ca.grid() == cb.grid())) throw ContractViolation("fields live on different grids");
    Complex acc{0.0, 0.0};
    for (std::size_t i = 0; i < ca.size(); ++i) acc += std::conj(ca[i]) * cb[i];
    return acc;
}

double l2_norm(const Field& f) {
    double acc = 0.0;
    for (const auto& v : f.values()) acc += std::norm(v);
    return std::sqrt(f.is_physical() ? acc * f.grid().cell_volume() : acc);
}

// ---------------------------------------------------------------- bands

bool FrequencyBand::contains(double xi_norm) const noexcept {
    if (kind == Kind::Ball) return xi_norm < center;
    return xi_norm >= 0.5 * center && xi_norm < 2.0 * center;
}

bool band_resolvable(const Grid& grid, const FrequencyBand& band) {
    for (std::size_t i = 0; i < grid.size(); ++i)
        if (band.contains(grid.frequency_norm(i))) return true;
    return false;
}

Field band_project(const Field& f, const FrequencyBand& band) {
    Field c = to_spectral(f);
    const Grid& g = c.grid();
    bool any = false;
    for (std::size_t i = 0; i < g.size(); ++i) {
        if (band.contains(g.frequency_norm(i))) {
            any = true;
        } else {
            c[i] = Complex{0.0, 0.0};
        }
    }
    if (!any) warn("band_project: band centered at " + std::to_string(band.center) +
                   " holds no lattice frequency; returning zero field");
    return c;
}

std::vector<Field> gradient(const Field& f) {
    const Field c = to_spectral(f);
    const Grid& g = c.grid();
    std::vector<Field> out;
    out.reserve(static_cast<std::size_t>(g.dim()));
    for (int axis = 0; axis < g.dim(); ++axis) {
        Field comp(g, Representation::Spectral);
        for (std::size_t i = 0; i < g.size(); ++i) {
            const auto idx = g.multi_index(i);
            if (idx[axis] == g.n() / 2) continue;
            comp[i] = Complex{0.0, g.frequency(i)[axis]} * c[i];
        }
        out.push_back(inverse_transform(comp));
    }
    return out;
}

}  // namespace gpelab

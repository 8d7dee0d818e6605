#pragma once
//
// Periodic grids, unitary-normalized transforms and the norm/projection
// primitives shared by every other module.
//
// Normalization: for a grid with n points per axis on [0, L)^d the spectral
// coefficient of mode k is
//
//     c_k = L^{d/2} / n^d * sum_j f(x_j) exp(-i xi_k . x_j),   xi_k = 2 pi k / L,
//
// so that sum_k |c_k|^2 = sum_j |f(x_j)|^2 (L/n)^d (Parseval with the physical
// quadrature weight) and f(x) = L^{-d/2} sum_k c_k exp(i xi_k . x).
//
#include <array>
#include <complex>
#include <cstddef>
#include <limits>
#include <span>
#include <vector>

namespace gpelab {

using Complex = std::complex<double>;
using Vec3 = std::array<double, 3>;

class Grid {
public:
    Grid(int dim, int n, double length);

    int dim() const noexcept { return dim_; }
    int n() const noexcept { return n_; }
    double length() const noexcept { return length_; }

    std::size_t size() const noexcept { return size_; }
    double cell_volume() const noexcept;
    double volume() const noexcept;
    double spacing() const noexcept { return length_ / n_; }
    /// 2 pi / L.
    double frequency_unit() const noexcept;

    /// Signed lattice index of the storage position along one axis, in [-n/2, n/2).
    int wavenumber(int index) const noexcept { return index < n_ / 2 ? index : index - n_; }
    /// Multi-index (axes beyond dim are zero) for a flat row-major offset.
    std::array<int, 3> multi_index(std::size_t flat) const noexcept;
    /// Frequency vector xi_k of a flat offset (unused axes zero).
    Vec3 frequency(std::size_t flat) const noexcept;
    double frequency_norm(std::size_t flat) const noexcept;
    /// Physical coordinate x_j of a flat offset (unused axes zero).
    Vec3 position(std::size_t flat) const noexcept;
    /// Largest |xi| representable on the lattice (corner of the index cube).
    double max_frequency() const noexcept;
    /// True if any axis sits at the unpaired index -n/2.
    bool is_nyquist(std::size_t flat) const noexcept;

    bool operator==(const Grid&) const = default;

private:
    int dim_;
    int n_;
    double length_;
    std::size_t size_;
};

enum class Representation { Physical = 0, Spectral = 1 };

/// Complex state on a Grid in either representation. Value type; copies are deep.
class Field {
public:
    Field(const Grid& grid, Representation rep);
    Field(const Grid& grid, Representation rep, std::vector<Complex> values);

    const Grid& grid() const noexcept { return grid_; }
    Representation representation() const noexcept { return rep_; }
    bool is_physical() const noexcept { return rep_ == Representation::Physical; }

    std::span<const Complex> values() const noexcept { return values_; }
    std::span<Complex> values() noexcept { return values_; }
    Complex& operator[](std::size_t i) { return values_[i]; }
    const Complex& operator[](std::size_t i) const { return values_[i]; }
    std::size_t size() const noexcept { return values_.size(); }

    Field& operator+=(const Field& other);
    Field& operator-=(const Field& other);
    Field& operator*=(Complex scale);

private:
    Grid grid_;
    Representation rep_;
    std::vector<Complex> values_;
};

Field operator+(Field a, const Field& b);
Field operator-(Field a, const Field& b);
Field operator*(Complex scale, Field a);

/// Evaluate a callable f(x: Vec3) -> Complex on the physical grid.
template <class Fn>
Field sample(const Grid& grid, Fn&& fn) {
    Field out(grid, Representation::Physical);
    for (std::size_t i = 0; i < grid.size(); ++i) out[i] = fn(grid.position(i));
    return out;
}

Field forward_transform(const Field& f);
Field inverse_transform(const Field& f);
Field to_physical(const Field& f);
/// Same normalization as the Field transforms, on a raw buffer of grid.size()
/// values, without allocating (for hot loops).
void forward_transform_inplace(const Grid& grid, std::span<Complex> data);
void inverse_transform_inplace(const Grid& grid, std::span<Complex> data);
Field to_spectral(const Field& f);

/// Multiply every spectral coefficient by symbol(xi). Result is Spectral.
template <class Symbol>
Field apply_symbol(const Field& f, Symbol&& symbol) {
    Field out = to_spectral(f);
    const Grid& g = out.grid();
    for (std::size_t i = 0; i < g.size(); ++i) out[i] *= symbol(g.frequency(i));
    return out;
}

/// (sum_k <xi_k>^{2s} |c_k|^2)^{1/2}.
double sobolev_norm(const Field& f, double s);
/// (sum_{k != 0} |xi_k|^{2s} |c_k|^2)^{1/2}; throws DegenerateInput for s < 0
/// when the zero mode carries more than 1e-14 of the total mass.
double homogeneous_norm(const Field& f, double s);

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();
/// Quadrature L^p norm on a Physical field; p = kInfinity gives the max norm.
double lp_norm(const Field& f, double p);
/// Physical-space quadrature of a pointwise real density.
double integrate(const Field& f, double (*density)(Complex));

struct FrequencyBand {
    enum class Kind { Annulus, Ball };
    double center;  // N_j > 0; kInfinity allowed for Ball
    Kind kind;

    static FrequencyBand annulus(double n) { return {n, Kind::Annulus}; }
    static FrequencyBand ball(double n) { return {n, Kind::Ball}; }
    bool contains(double xi_norm) const noexcept;
};

/// True if at least one lattice frequency lies in the band.
bool band_resolvable(const Grid& grid, const FrequencyBand& band);
/// Orthogonal projection onto the band; warns and returns zero if no mode is in the band.
Field band_project(const Field& f, const FrequencyBand& band);

/// Spectral gradient; the -n/2 mode is zeroed along the differentiated axis.
std::vector<Field> gradient(const Field& f);

/// Spectral inner product sum_k conj(a_k) b_k.
Complex spectral_inner(const Field& a, const Field& b);
double l2_norm(const Field& f);

}  // namespace gpelab

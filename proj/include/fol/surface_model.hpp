#pragma once

#include "fol/exact_linalg.hpp"
#include "fol/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fol {

struct Curve {
    std::string id;
    Rational self_int;
    Rational chi;
    Rational kx_dot;
    bool invariant = false;
    // Total tangency order; meaningful only for non-invariant curves.
    Rational tang;
    bool nodal = false;

    friend bool operator==(const Curve&, const Curve&) = default;
};

enum class SingKind { Reduced, PoincareDulac };

// Local data of one marked curve branch through a foliation singularity.
// A node incidence stands for both branches of a nodal curve at its node.
struct Incidence {
    std::string curve;
    Rational z;
    Rational cs;
    bool node = false;

    friend bool operator==(const Incidence&, const Incidence&) = default;
};

struct FoliationSingularity {
    std::string id;
    SingKind kind = SingKind::Reduced;
    // Stored up to inversion; for Poincare-Dulac points a positive integer.
    Rational lambda;
    std::vector<Incidence> incidences;

    const Incidence* incidence_on(const std::string& curve) const;
    friend bool operator==(const FoliationSingularity&, const FoliationSingularity&) = default;
};

// Cyclic quotient singularity of the ambient surface.
struct AmbientSingularity {
    std::string id;
    Rational order;
    std::vector<std::string> curves;

    friend bool operator==(const AmbientSingularity&, const AmbientSingularity&) = default;
};

// Finite Q-divisor over marked curve ids; zero coefficients are not stored.
using QDivisor = std::map<std::string, Rational>;

void add_term(QDivisor& d, const std::string& id, const Rational& c);
QDivisor operator+(const QDivisor& a, const QDivisor& b);
QDivisor operator-(const QDivisor& a, const QDivisor& b);
QDivisor scale(const QDivisor& a, const Rational& c);

class SurfaceModel {
public:
    std::vector<Curve> curves;
    // Indexed like `curves`; diagonal mirrors each curve's self_int.
    SymMatrix pairing;
    std::vector<FoliationSingularity> fol_sings;
    std::vector<AmbientSingularity> amb_sings;
    bool pseudoeffective = false;

    std::optional<std::size_t> find(const std::string& id) const;
    // Throws UnknownCurve.
    std::size_t index(const std::string& id) const;
    const Curve& curve(const std::string& id) const { return curves[index(id)]; }
    Curve& curve(const std::string& id) { return curves[index(id)]; }

    Rational dot(const std::string& a, const std::string& b) const;
    void set_dot(const std::string& a, const std::string& b, const Rational& v);
    void add_curve(const Curve& c);
    void remove_curve(const std::string& id);

    bool ambient_smooth() const { return amb_sings.empty(); }
    bool meets_singular_ambient(const std::string& id) const;
    std::vector<Rational> ambient_orders_on(const std::string& id) const;

    // Foliation singularities carrying an incidence on the curve, in list order.
    std::vector<std::size_t> singularities_on(const std::string& id) const;
    Rational z_total(const std::string& id) const;
    Rational cs_total(const std::string& id) const;

    std::optional<std::size_t> find_fol_sing(const std::string& id) const;
    std::string fresh_curve_id(const std::string& stem) const;
    std::string fresh_point_id(const std::string& stem) const;

    friend bool operator==(const SurfaceModel&, const SurfaceModel&) = default;
};

// Not nodal and chi equals the orbifold value for the ambient points it meets.
bool is_smooth_rational(const SurfaceModel& m, const std::string& id);

struct Violation {
    std::string clause;
    std::string subject;
    std::string detail;
};

// Clause labels used in violation reports.
namespace clause {
inline constexpr const char* duplicate_id = "duplicate-id";
inline constexpr const char* unknown_curve = "unknown-curve";
inline constexpr const char* pairing_shape = "pairing-shape";
inline constexpr const char* pairing_diagonal = "pairing-diagonal";
inline constexpr const char* pairing_nonnegative = "pairing-nonnegative";
inline constexpr const char* pairing_integral = "pairing-integral";
inline constexpr const char* point_disjointness = "point-disjointness";
inline constexpr const char* ambient_order = "ambient-order";
inline constexpr const char* reduced_eigenvalue = "reduced-eigenvalue";
inline constexpr const char* poincare_dulac_eigenvalue = "poincare-dulac-eigenvalue";
inline constexpr const char* branch_count = "branch-count";
inline constexpr const char* incidence_invariance = "incidence-invariance";
inline constexpr const char* z_integral = "z-integral";
inline constexpr const char* z_bounds = "z-bounds";
inline constexpr const char* saddle_node = "saddle-node";
inline constexpr const char* cs_eigenvalue = "cs-eigenvalue";
inline constexpr const char* camacho_sad = "camacho-sad";
inline constexpr const char* tangency = "tangency";
inline constexpr const char* euler_characteristic = "euler-characteristic";
inline constexpr const char* invariant_meeting = "invariant-meeting";
inline constexpr const char* delta_effective = "delta-effective";
inline constexpr const char* delta_round_down = "delta-round-down";
inline constexpr const char* delta_invariant_component = "delta-invariant-component";
}  // namespace clause

// Every combinatorial constraint on a foliated surface; violations are data.
std::vector<Violation> validate(const SurfaceModel& m);

// Throws UnknownCurve for components that are not marked curves.
std::vector<Violation> delta_validate(const SurfaceModel& m, const QDivisor& delta);

Rational pair(const SurfaceModel& m, const QDivisor& d, const std::string& id);
Rational pair(const SurfaceModel& m, const QDivisor& a, const QDivisor& b);

}  // namespace fol

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tcbounds/algebra.hpp"

namespace tcb {

enum class Family {
    Sphere,                // sphere:m
    SphereProduct,         // spheres:m:k
    OrientableSurface,     // torus-sum:g
    NonorientableSurface,  // proj-sum:g
    RealProjective,        // rp:m
    ComplexProjective,     // cp:m
    ConfigurationSpace,    // conf:m:k
};

struct ParamRange {
    std::string name;
    int min;
    int max;
};

struct FamilyDescriptor {
    Family family;
    std::string key;           // designator prefix
    std::string title;         // e.g. "(S^m)^k"
    std::string coefficients;  // "Z" or "Z/2"
    std::vector<ParamRange> params;
    std::string closed_form;   // tc_n as a formula in n and the parameters

    bool accepts(const std::vector<int>& values) const;
};

/// Stable order: the column order of the tc_n summary table.
const std::vector<FamilyDescriptor>& list_catalog();
const FamilyDescriptor& descriptor(Family family);

struct SpaceEntry {
    Family family;
    std::vector<int> params;
    std::string designator;   // canonical, e.g. "conf:3:4"
    std::string title;        // e.g. "F(R^3,4)"
    Presentation presentation;
    int dimension;            // equals presentation.top_degree()
    int connectivity;         // r: the space is (r-1)-connected
    bool kunneth_safe;
    std::function<int(int)> closed_form_tc;  // empty when no closed form is known

    std::optional<int> expected_tc(int n) const;
};

/// Throws InvalidArgument for parameters outside the family's range.
SpaceEntry space(Family family, const std::vector<int>& params);
/// Parses "sphere:m", "spheres:m:k", "torus-sum:g", "proj-sum:g", "rp:m",
/// "cp:m", "conf:m:k". Throws ParseError on malformed text and
/// InvalidArgument on out-of-range parameters.
SpaceEntry space(std::string_view designator);

}  // namespace tcb

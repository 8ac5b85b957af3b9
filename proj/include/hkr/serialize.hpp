#pragma once

// Canonical JSON for class functions and enumeration listings. See README
// for the schema. Rationals are always "num/den" strings.

#include <string>

#include "json.hpp"

#include "hkr/bijections.hpp"
#include "hkr/class_function.hpp"

namespace hkr {

using Json = nlohmann::ordered_json;

std::string rational_to_string(const Rational& r);
/// Accepts "a/b" or "a". Throws ParseError.
Rational rational_from_string(const std::string& s);

/// `group_spec` must rebuild f's group through build_group.
Json to_json(const ClassFunction& f, const std::string& group_spec);
/// Throws ParseError on malformed input, TooLarge via build_group.
ClassFunction class_function_from_json(const Json& j);
/// Two-space indented, trailing newline.
std::string dump(const Json& j);

/// Built-in inputs: "one", "coordinate" (xi_00 + class index), "random:<seed>"
/// (entries uniform in [-3, 3]). Throws ParseError for unknown names.
ClassFunction generate_class_function(const std::string& name, HomClassesPtr classes, C0SpacePtr space);

Json subgroup_to_json(const TorsionSubgroup& h);
Json sum_to_json(const SumOfSubgroups& s);
Json decorated_to_json(const DecoratedSum& s);

}  // namespace hkr

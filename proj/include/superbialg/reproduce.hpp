#pragma once

#include "superbialg/serialize.hpp"

#include <optional>
#include <string>
#include <vector>

namespace superbialg {

/// A catalogued expected value, as transcribed from a displayed formula.
struct Fixture {
    std::string name;  // e.g. "paper.s3_1.delta_f"
    std::string kind;  // algebra, tensor, cochain, map, bialgebra, manin_triple
    Json expected;
};

std::vector<Fixture> fixtures();
std::optional<Fixture> find_fixture(const std::string& name);

/// "2", "3.1", "3.2", "3.3", "3.4"
const std::vector<std::string>& reproduction_sections();

/// Recomputes every expected value of a section and compares exactly.
/// Check names start with the fixture they exercise. Throws InvalidInput for an unknown section.
VerificationReport reproduce(const std::string& section);

/// Subscripts the digits that follow a letter: "y1*" -> "y₁*", "2*E21" -> "2*E₂₁".
std::string subscripted(const std::string& text);

}  // namespace superbialg

#ifndef SNC_EXAMPLES_HPP
#define SNC_EXAMPLES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "snc/io.hpp"

namespace snc
{

struct Example
{
    Document document;
    /// Fermat only: the 2n lines on the cover with the rotation τ recorded
    /// as the action, so that the degree-1 extension complex is Γ_L / ⟨τ⟩.
    std::optional<SncConfiguration> cover;
    std::vector<std::string> notes;
};

/// D: (x^2 - y^2)(z^2 - w^2) = 0 on P1 x P1, π1(Ȳ0) = 0.
Example rulings_example();

/// Quotient of the 2n lines on the Fermat surface by τ. Throws
/// std::invalid_argument for n < 2.
Example fermat_example(std::uint64_t n);

/// "rulings" or "fermat".
Example generate_example(const std::string& kind, std::uint64_t n = 5);

} // namespace snc

#endif

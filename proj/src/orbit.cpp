#include "gibbsod/orbit.hpp"

#include <algorithm>
#include <string>

#include "gibbsod/error.hpp"

namespace gibbsod {

void require_finite(const PositionTriple& r) {
    for (const auto& v : r) {
        if (!v.is_finite()) throw OdError(ErrorCode::InputError, "position is not finite");
    }
}

void require_distinct(const PositionTriple& r) {
    const double scale = std::max({norm(r[0]), norm(r[1]), norm(r[2])});
    for (int i = 0; i < 3; ++i) {
        for (int j = i + 1; j < 3; ++j) {
            if (norm(r[static_cast<std::size_t>(i)] - r[static_cast<std::size_t>(j)]) <= 1e-9 * scale) {
                throw OdError(ErrorCode::DuplicatePoints,
                              "positions " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                  " coincide");
            }
        }
    }
}

void require_not_collinear(const PositionTriple& r) {
    const Vector3 a = r[1] - r[0];
    const Vector3 b = r[2] - r[0];
    if (!(norm(cross(a, b)) > 1e-12 * norm(a) * norm(b))) {
        throw OdError(ErrorCode::CollinearPositions, "the three positions lie on a straight line");
    }
}

}  // namespace gibbsod

#pragma once

// Plot data for the two geometric illustrations:
//
//   Fig1  Moore-Newton on f = x^2 - 4, X = [1, 4]: endpoint slopes translated
//         to md(X) and the resulting candidate interval
//   Fig2  KingLike(0) on f = x^3 + x^2 - 12, X = [0.5, 2.1]: (a) the Newton
//         stage, (b) the slopes c f'(lo), c f'(hi) translated to md(Y)

#include <string_view>

#include <json.hpp>

namespace ivlab::lab {

enum class Figure { Fig1, Fig2 };

std::string_view to_string(Figure which);
Figure parse_figure(std::string_view text);

/// Numeric series (as JSON) for any plotting tool. Key values are also given
/// exactly as strings.
nlohmann::json figure_data(Figure which, int samples = 201);

}  // namespace ivlab::lab

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ammlab/engine.hpp"

namespace ammlab {

/// Taxonomy dimensions in the row order of the published classification grid.
enum class Dimension {
    InformationIncorporation,
    LiquidityConcentration,
    LiquiditySensitivity,
    PathDeficiency,
    PathIndependence,
    PriceBounding,
    PriceDiscovery,
    TokenPriceSource,
    TranslationInvariance,
    VolumeDependency,
    NumberOfTokens,
    RiskManagement,
    SourceOfLiquidity,
    SupportedTradingPairs,
    Interoperability,
    LimitOrderFunctionality,
    ParameterAdjustment,
};

const std::vector<Dimension>& all_dimensions();
std::string_view dimension_name(Dimension d);
std::optional<Dimension> dimension_from_name(std::string_view name);
/// False for dimensions read from the pool specification.
bool is_probeable(Dimension d);
/// Characteristic labels the dimension may take.
const std::vector<std::string>& legal_characteristics(Dimension d);

inline constexpr std::string_view kIndeterminate = "Indeterminate";
inline constexpr double kInvariantTolerance = 1e-6;
inline constexpr double kVariantThreshold = 1e-3;

struct DimensionVerdict {
    Dimension dimension = Dimension::InformationIncorporation;
    std::string characteristic;
    double max_deviation = 0.0;  // path deficiency reports the minimum round-trip gain here
    int trials = 0;
    double tolerance = 0.0;
};

struct TaxonomyReport {
    std::string pool;
    std::uint64_t seed = 0;
    int trials = 0;
    std::vector<DimensionVerdict> verdicts;  // one per dimension, grid order

    const DimensionVerdict& at(Dimension d) const;
    /// Header `dimension,characteristic,max_deviation,trials,tolerance`.
    std::string to_csv() const;
};

DimensionVerdict run_dimension_probe(const PoolConfig& config, Dimension dimension, std::uint64_t seed,
                                     int trials = 200);

TaxonomyReport classify(const PoolConfig& config, std::uint64_t seed, int trials = 200);

/// Reference classification grid for the AMMs the built-in pools imitate.
struct ReferenceColumn {
    std::string amm;
    std::string builtin;  // matching built-in pool name
};
const std::vector<ReferenceColumn>& reference_columns();
std::optional<ReferenceColumn> reference_for_builtin(std::string_view builtin);
/// Cell as printed (empty when the column has no mark for the dimension).
std::string reference_cell_literal(std::string_view amm, Dimension d);
/// Cell after the corrections documented in the README (inverted token price source,
/// price bounding and token counts restated from the dimension definitions).
std::string reference_cell(std::string_view amm, Dimension d);

}  // namespace ammlab

#pragma once

namespace blockspec::tol {

// Deterministic numeric tolerances.
inline constexpr double kOrthogonalityResidual = 1e-12;
inline constexpr double kSpecialOrthogonalDet = 1e-10;
inline constexpr double kSlDetRelative = 1e-8;
inline constexpr double kEigConsistencyRelative = 1e-8;
inline constexpr double kEigResidualRelative = 1e-8;
inline constexpr double kSelfConsistencyResidual = 1e-10;
inline constexpr double kDensityNormalization = 1e-10;
inline constexpr double kQuantileScaling = 1e-10;
inline constexpr double kCdfDensityFiniteDifference = 1e-6;
inline constexpr double kFrobeniusIdentity = 1e-10;
inline constexpr double kSpectrumPermutationInvariance = 1e-9;
inline constexpr double kAlignRidAgreement = 1e-12;
inline constexpr double kRidShiftInvariance = 1e-12;

// Monte Carlo bands.
inline constexpr double kMcSigmaFactor = 3.0;
inline constexpr long kMcDraws = 100000;
inline constexpr double kHeavyTailGrowthFactor = 2.0;
inline constexpr double kNaiveQrMeanFloor = 0.1;
inline constexpr double kNaiveQrKsSeparation = 5.0; // multiples of the critical value

// Acceptance criteria.
inline constexpr double kSemicircleKs = 0.03;          // 1
inline constexpr double kGaussianEquivalenceKs = 0.04; // 2
inline constexpr double kOutlierEdgeFactor = 3.0;      // 3
inline constexpr double kOutlierSeedFraction = 0.95;
inline constexpr int kOutlierSeedCount = 100;
inline constexpr double kOutlierBulkCut = 3.0;
inline constexpr double kOutlierBulkKs = 0.05;
inline constexpr double kOutlierSpotCheckLo = 10.0;
inline constexpr double kOutlierSpotCheckHi = 18.0;
inline constexpr double kSlTailFactor = 1.5; // 4
inline constexpr long kSlTailSamples = 100000;
inline constexpr double kSlGofPValue = 0.001;
inline constexpr int kSlGofBins = 30;
inline constexpr double kSlBulkKs = 0.06; // 5
inline constexpr double kConcentrationSlopeMax = -0.4; // 6
inline constexpr int kConcentrationReps = 50;
inline constexpr int kRankPerturbationInstances = 100; // 7
inline constexpr double kGclUniformityPValue = 0.001;  // 8
inline constexpr double kGclIndependencePValue = 0.001;
inline constexpr double kGclEigenvalueSlack = 1e-9;
inline constexpr double kGclTwoSeedKs = 0.05;
inline constexpr double kGoeDiagonalFraction = 0.95; // 9
inline constexpr double kOracleEigAgreement = 1e-9;  // 10
inline constexpr double kOracleStieltjesAgreement = 1e-9;
inline constexpr int kOracleAlignInstances = 1000;

} // namespace blockspec::tol

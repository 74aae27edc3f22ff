#pragma once

// Bundled reference tables: published variational results for the two
// potential families at the parameter sets quoted in their captions
// (Cornell A=0.5, B=2; global A=0.5, B=2, C=0.8; mu = 1 GeV). Values are
// carried as verbatim strings and never recomputed, so any comparison output
// shows exactly what the source printed. Columns per row: cutoff z, decay
// rate a, wavefunction at origin |psi(0)|^2, mean radius, energy.

#include <cstdlib>
#include <vector>

#include "hardwall/potential.hpp"

namespace hardwall {

struct ReferenceRow {
    double z;
    const char* a;
    const char* wfo;
    const char* mean_radius;
    const char* energy;
};

struct ReferenceTable {
    const char* name;      // stable identifier used in filenames and reports
    PotentialModel model;  // strengths as printed in the caption
    double trial_b;
    std::vector<ReferenceRow> rows;
};

inline const std::vector<ReferenceTable>& reference_tables() {
    static const std::vector<ReferenceTable> tables = {
        {"cornell_b1",
         CornellPotential{0.5, 2.0},
         1.0,
         {
             {1.0, "0.804769", "5.09835", "0.443098", "-0.050878"},
             {3.0, "0.0627947", "0.106478", "1.45965", "-37.4639"},
             {4.0, "0.335031", "0.125545", "1.62754", "-57.2779"},
             {5.0, "0.519695", "0.162228", "1.65681", "-76.5087"},
         }},
        {"cornell_b2",
         CornellPotential{0.5, 2.0},
         2.0,
         {
             {1.0, "0.885092", "3.75142", "0.4424", "-0.0547323"},
             {2.0, "0.0533772", "0.336013", "0.970131", "-10.1952"},
             {3.0, "0.0870008", "0.132553", "1.34537", "-43.0644"},
             {4.0, "0.15255", "0.106019", "1.46991", "-87.0158"},
             {5.0, "0.194375", "0.101128", "1.48399", "-141.646"},
         }},
        {"global_b1",
         GlobalPotential{0.5, 2.0, 0.8},
         1.0,
         {
             {1.0, "1.65865", "10.344", "0.386356", "0.07915"},
             {2.0, "0.507205", "0.765083", "0.85739", "-2.16297"},
             {3.0, "0.665471", "0.493858", "1.09675", "-6.68171"},
             {4.0, "0.848832", "0.520176", "1.16739", "-11.3696"},
             {5.0, "0.960957", "0.55883", "1.18452", "-16.993"},
         }},
        {"global_b2",
         GlobalPotential{0.5, 2.0, 0.8},
         2.0,
         {
             {1.0, "1.54294", "4.94705", "0.40693", "0.157745"},
             {2.0, "0.5", "0.731946", "0.771337", "-2.61122"},
             {3.0, "0.383842", "0.336937", "1.13758", "-9.34193"},
             {4.0, "0.452373", "0.302755", "1.02107", "-17.6167"},
             {5.0, "0.493727", "0.290524", "1.022", "-28.0771"},
         }},
    };
    return tables;
}

// Numeric view of a verbatim cell.
inline double reference_value(const char* cell) { return std::strtod(cell, nullptr); }

}  // namespace hardwall

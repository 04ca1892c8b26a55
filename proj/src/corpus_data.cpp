#include "corpus_data.hpp"

namespace mcdm::detail {

// Embedded datasets together with their published reference results.
// expectedAhp/expectedFuzzy/consistency carry the published rounded values;
// trendRow carries the published transition counts per category in the order
// both_increase, ahp_up_fuzzy_down, ahp_down_fuzzy_up, both_decrease,
// fuzzy_unchanged, ahp_unchanged.
const std::vector<RawDataset>& rawCorpus() {
    static const std::vector<RawDataset> data = {
    {"Risk",
     {"RELY", "DURN", "CPLX", "CPIS", "CADP", "SCAP", "WSZE", "WSKL", "SEXP", "UMTG", "SCED", "PMEX", "PDTH", "RISK", "RVOL"},
     {
         1, 3, 7, 9, 7, 9, 3, 5, 5, 5, 3, 1, 3, 9, 5,
         5, 1, 3, 5, 5, 3, 7, 5, 3, 5, 9, 3, 3, 3, 9,
         9, 5, 1, 9, 9, 9, 7, 9, 5, 7, 5, 7, 3, 9, 5,
         3, 3, 5, 1, 1, 3, 3, 5, 3, 1, 3, 5, 3, 7, 1,
         9, 1, 1, 1, 1, 1, 3, 3, 5, 5, 3, 3, 1, 7, 1,
         5, 7, 5, 3, 1, 1, 7, 7, 3, 1, 5, 7, 1, 9, 1,
         1, 9, 7, 1, 1, 3, 1, 9, 3, 3, 5, 1, 1, 3, 1,
         7, 7, 5, 5, 1, 5, 3, 1, 5, 3, 7, 1, 1, 9, 3,
         1, 1, 3, 1, 1, 5, 3, 7, 1, 1, 1, 3, 1, 3, 1,
         7, 5, 5, 3, 3, 9, 3, 7, 3, 1, 3, 5, 3, 9, 7,
         1, 5, 7, 1, 1, 5, 9, 9, 3, 5, 1, 1, 5, 7, 3,
         3, 1, 1, 3, 1, 7, 3, 5, 7, 5, 3, 1, 7, 1, 1,
         1, 1, 7, 3, 1, 5, 3, 5, 1, 1, 1, 3, 1, 1, 1,
         5, 7, 9, 7, 3, 7, 3, 9, 5, 9, 3, 3, 3, 1, 5,
         5, 1, 3, 1, 7, 3, 1, 1, 5, 1, 5, 3, 5, 7, 1,
     },
     {{"RELY", "CPLX", 9}, {"CPLX", "RELY", 3}, {"WSZE", "SCED", 1}, {"WSKL", "SCED", 1}},
     {0.085, 0.083, 0.114, 0.051, 0.05, 0.069, 0.052, 0.069, 0.034, 0.081, 0.068, 0.057, 0.038, 0.09, 0.058},
     {0.33, 0.429, 0.33, 0.33, 0.11, 0.11, 0.11, 0.11, 0.2, 0.6, 0.33, 0.143, 0.2, 0.429, 0.11},
     "CPLX",
     "UMTG",
     {61.72, 3.34, 1.72, 1.94},
     {2, 2, 3, 3, 4, 0}},
    {"Customer",
     {"ENG", "PIS", "RMG", "STF", "SRT"},
     {
         1, 5, 2, 5, 7,
         5, 1, 6, 3, 3,
         4, 4, 1, 1, 1,
         6, 8, 1, 1, 8,
         3, 1, 8, 8, 1,
     },
     {{"STF", "SRT", 1}},
     {0.211, 0.193, 0.116, 0.25, 0.23},
     {0.5, 0.38, 0.12, 0.12, 0.33},
     "STF",
     "ENG",
     {18.86, 3.47, 1.19, 2.92},
     {0, 0, 1, 2, 1, 0}},
    {"Organization",
     {"BPC", "BPN", "EXS", "MSN", "SPN", "STR", "VSN"},
     {
         1, 4, 2, 5, 1, 2, 5,
         5, 1, 6, 7, 3, 5, 8,
         4, 4, 1, 1, 5, 3, 1,
         6, 8, 1, 1, 5, 1, 3,
         3, 1, 8, 8, 1, 6, 4,
         5, 6, 6, 7, 3, 1, 9,
         4, 4, 3, 1, 5, 4, 1,
     },
     {},
     {0.102, 0.184, 0.106, 0.133, 0.164, 0.188, 0.123},
     {0.33, 0.83, 0.33, 0.14, 0.33, 0.5, 0.33},
     "STR",
     "BPN",
     {26.58, 3.26, 1.41, 2.31},
     {3, 1, 0, 2, 0, 0}},
    {"Policy",
     {"AUL", "BCP", "DSP", "PAT", "PPY", "PSD", "RRN"},
     {
         1, 3, 1, 7, 2, 3, 6,
         7, 1, 7, 8, 2, 3, 7,
         4, 1, 1, 3, 5, 4, 2,
         1, 7, 3, 1, 3, 5, 4,
         8, 1, 7, 7, 1, 8, 7,
         5, 5, 6, 6, 1, 1, 8,
         3, 4, 8, 8, 8, 1, 1,
     },
     {},
     {0.108, 0.159, 0.105, 0.131, 0.182, 0.149, 0.166},
     {0.25, 0.6, 0.14, 0.14, 0.5, 0.12, 0.12},
     "PPY",
     "BCP",
     {28.88, 3.65, 1.41, 2.58},
     {2, 0, 0, 2, 2, 0}},
    {"Process",
     {"AUD", "CBP", "CRP", "FRC", "NGP", "POG", "SPL"},
     {
         1, 4, 6, 9, 3, 2, 7,
         9, 1, 7, 1, 3, 3, 6,
         8, 2, 1, 4, 2, 4, 3,
         4, 5, 1, 1, 5, 5, 5,
         4, 2, 5, 6, 1, 7, 8,
         1, 6, 7, 6, 9, 1, 1,
         7, 3, 7, 5, 1, 2, 1,
     },
     {},
     {0.156, 0.141, 0.118, 0.139, 0.162, 0.162, 0.122},
     {0.44, 0.2, 0.29, 0.25, 0.67, 0.5, 0.12},
     "POG",
     "NGP",
     {28.57, 3.59, 1.41, 2.54},
     {1, 1, 1, 2, 0, 1}},
    {"Staff",
     {"CRT", "CTR", "CEG", "EEG", "JQF", "MGP", "PFO", "PRT", "TRP"},
     {
         1, 3, 7, 5, 1, 2, 6, 3, 7,
         4, 1, 5, 6, 8, 7, 8, 5, 1,
         8, 2, 1, 4, 2, 4, 3, 1, 9,
         4, 5, 1, 1, 5, 5, 5, 4, 5,
         5, 5, 3, 1, 1, 8, 4, 7, 6,
         1, 6, 7, 6, 9, 1, 1, 7, 2,
         9, 9, 7, 1, 3, 3, 1, 6, 2,
         1, 4, 6, 9, 3, 2, 7, 1, 3,
         4, 3, 6, 7, 8, 3, 6, 4, 1,
     },
     {},
     {0.1, 0.128, 0.101, 0.102, 0.118, 0.113, 0.118, 0.101, 0.119},
     {0.2, 0.33, 0.17, 0.25, 0.2, 0.33, 0.2, 0.29, 0.57},
     "CTR",
     "TRP",
     {38.62, 3.7, 1.54, 2.4},
     {3, 2, 2, 1, 0, 0}},
    {"Tools",
     {"CWA", "CSS", "CMS", "CTL", "RFX", "EXW", "PCD", "PPO", "RQS", "RVA", "RFT", "TPR", "VPS", "VRM"},
     {
         1, 7, 8, 4, 7, 3, 7, 1, 6, 7, 7, 3, 7, 5,
         6, 1, 9, 1, 4, 2, 5, 9, 9, 7, 4, 2, 5, 6,
         1, 3, 1, 6, 8, 2, 5, 1, 4, 6, 8, 2, 5, 4,
         9, 3, 2, 1, 4, 5, 1, 4, 3, 6, 4, 5, 1, 2,
         7, 3, 7, 5, 1, 2, 9, 9, 1, 2, 5, 5, 3, 1,
         4, 2, 5, 6, 8, 1, 3, 3, 6, 5, 1, 6, 7, 6,
         8, 2, 5, 4, 2, 4, 1, 2, 7, 2, 2, 5, 4, 2,
         4, 5, 1, 2, 5, 5, 3, 1, 5, 7, 5, 1, 2, 5,
         5, 5, 3, 1, 7, 8, 9, 3, 1, 7, 4, 5, 3, 2,
         4, 5, 1, 2, 5, 5, 5, 4, 5, 1, 4, 3, 1, 1,
         5, 5, 3, 1, 7, 8, 4, 7, 6, 6, 1, 1, 9, 8,
         8, 2, 5, 4, 2, 4, 3, 3, 1, 2, 5, 1, 5, 7,
         2, 5, 5, 5, 4, 6, 9, 2, 3, 1, 7, 8, 1, 9,
         3, 1, 8, 8, 3, 5, 1, 3, 3, 6, 8, 2, 5, 1,
     },
     {{"VPS", "VRM", 1}},
     {0.088, 0.083, 0.067, 0.06, 0.074, 0.077, 0.061, 0.061, 0.075, 0.056, 0.086, 0.062, 0.082, 0.069},
     {0.25, 0.33, 0.12, 0.2, 0.14, 0.12, 0.22, 0.33, 0.33, 0.17, 0.2, 0.2, 0.2, 0.17},
     "CWA",
     "CSS",
     {59.43, 3.49, 1.7, 2.06},
     {1, 2, 3, 3, 3, 1}},
    {"Vendors",
     {"AVL", "MMS", "VCN", "VQN", "VRN", "VRG"},
     {
         1, 5, 4, 2, 4, 3,
         5, 1, 2, 5, 5, 5,
         5, 3, 1, 7, 8, 4,
         6, 7, 6, 1, 9, 1,
         9, 7, 1, 3, 1, 6,
         4, 6, 9, 3, 2, 1,
     },
     {},
     {0.127, 0.158, 0.187, 0.185, 0.177, 0.166},
     {0.33, 0.67, 0.44, 0.33, 0.12, 0.33},
     "VCN",
     "MMS",
     {25.03, 3.81, 1.32, 2.89},
     {1, 1, 1, 2, 0, 0}},
    };
    return data;
}

const ExpectedSummary& rawSummary() {
    static const ExpectedSummary summary = {
        {"Customer", "Organization", "Policy", "Process", "Staff", "Tools",
         "Vendors"},
        {1, 0, 2, 3, 0, 0},
        {20.59, 13.24, 19.12, 29.41, 14.71, 2.94},
        50.00,
        32.36,
        17.65,
    };
    return summary;
}

} // namespace mcdm::detail

// Copyright 2026 The pdc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// CSV and JSON serialization of module results. Counts are exact; reals
// are printed to 10 significant digits.

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

#include "pdc/champions.hpp"
#include "pdc/counting.hpp"
#include "pdc/hardy_littlewood.hpp"
#include "pdc/moments.hpp"
#include "pdc/singular.hpp"
#include "pdc/verify.hpp"

namespace pdc {

std::string format_real(long double v);

// Number when it fits in 64 bits, decimal string otherwise.
nlohmann::json big_to_json(const mpz_class& v);

nlohmann::json to_json(const DifferenceSet& d);
nlohmann::json to_json(const SingularValue& s);
nlohmann::json to_json(const Prediction& p);
nlohmann::json to_json(const MomentReport& r);
nlohmann::json to_json(const ChampionRecord& r);
nlohmann::json to_json(const TheoremProfile& p);
nlohmann::json to_json(const Verdict& v);
nlohmann::json to_json(const GapHistogram& h);

// "d,count" rows.
void write_histogram_csv(std::ostream& os, const std::vector<std::uint64_t>& d,
                         const std::vector<std::uint64_t>& counts);
void write_gap_csv(std::ostream& os, const GapHistogram& h);
void write_pair_csv(std::ostream& os, const PairHistogram& h);

// "x,k,mode,max_count,winners,gcd,runner_ups"; winners as space-separated
// elements, sets joined by ';'; runner-ups as "2 6=3;...".
void write_champions_header(std::ostream& os);
void write_champion_row(std::ostream& os, const ChampionRecord& r);

void write_prediction_csv(std::ostream& os, const std::vector<Prediction>& rows);
void write_verdicts_csv(std::ostream& os, const std::vector<TheoremProfile>& profiles,
                        const std::vector<std::vector<Verdict>>& verdicts);

}  // namespace pdc

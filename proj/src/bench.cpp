#include "ecdlp/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include <json.hpp>

#include "ecdlp/errors.hpp"
#include "ecdlp/io.hpp"
#include "ecdlp/keys.hpp"
#include "ecdlp/rng.hpp"

namespace ecdlp {

using ordered_json = nlohmann::ordered_json;

namespace {

unsigned bits_of_order(const BigUint& n) {
  // ceil(log2 n) = bit_length(n - 1) for n >= 2
  if (n <= BigUint(1)) return 0;
  return static_cast<unsigned>((n - BigUint(1)).bit_length());
}

std::string derived_id(const DomainParams& params) {
  return "p" + params.curve.p.value().to_decimal() + "a" +
         params.curve.a.value().to_decimal() + "b" +
         params.curve.b.value().to_decimal();
}

std::string format_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.9f", s);
  return buf;
}

AttackMethod method_from_name(const std::string& name) {
  if (name == "linear_walk") return AttackMethod::linear_walk;
  if (name == "bsgs") return AttackMethod::bsgs;
  throw ParseError("unknown attack method \"" + name + "\"");
}

std::vector<CurveEntry> resolve_suite(const BenchConfig& config) {
  std::vector<CurveEntry> entries;
  if (const auto* range = std::get_if<SearchRange>(&config.suite)) {
    for (auto& params :
         curve_search(range->p_min, range->p_max, range->prime_order)) {
      std::string id = derived_id(params);
      entries.push_back(CurveEntry{std::move(id), std::move(params)});
    }
  } else {
    entries = std::get<std::vector<CurveEntry>>(config.suite);
  }
  for (auto& entry : entries) {
    if (entry.id.find_first_of(",\n") != std::string::npos)
      throw ParseError("curve id \"" + entry.id + "\" contains a delimiter");
    validate_params(entry.params);
  }
  return entries;
}

struct FitAccumulator {
  // exact integer sums; __int128 holds every desk-scale suite comfortably
  __int128 sum_x = 0, sum_y = 0, sum_xx = 0, sum_xy = 0;
  std::int64_t count = 0;

  void add(std::int64_t x, std::int64_t y) {
    sum_x += x;
    sum_y += y;
    sum_xx += static_cast<__int128>(x) * x;
    sum_xy += static_cast<__int128>(x) * y;
    ++count;
  }
};

double i128_to_double(__int128 v) {
  return static_cast<double>(v);
}

}  // namespace

std::vector<BenchRecord> run_suite(const BenchConfig& config) {
  if (config.trials_per_curve < 1)
    throw ParseError("trials_per_curve must be at least 1");
  if (config.methods.empty())
    throw ParseError("the method set must not be empty");

  std::vector<CurveEntry> entries = resolve_suite(config);
  std::vector<BenchRecord> records;
  records.reserve(entries.size() * config.trials_per_curve *
                  config.methods.size());

  for (const auto& entry : entries) {
    const DomainParams& params = entry.params;
    unsigned bits = bits_of_order(params.n);
    for (std::uint64_t t = 0; t < config.trials_per_curve; ++t) {
      std::uint64_t trial_seed = mix_trial_seed(config.seed, entry.id, t);

      OpCountScope keygen_scope;
      KeyPair kp = keygen(params, trial_seed);
      std::uint64_t keygen_ops = keygen_scope.point_adds();

      for (AttackMethod method : config.methods) {
        BenchRecord rec;
        rec.curve_id = entry.id;
        rec.p = params.curve.p.value();
        rec.n = params.n;
        rec.bits = bits;
        rec.d = kp.d;
        rec.method = method;
        rec.keygen_ops = keygen_ops;

        OpCountScope attack_scope;
        auto start = std::chrono::steady_clock::now();
        try {
          if (method == AttackMethod::linear_walk) {
            if (params.n > BigUint(config.op_cap))
              throw CapExceeded("n exceeds the configured op cap");
            AttackResult r = linear_walk(params, kp.q, config.op_cap);
            rec.group_ops = r.group_ops;
            rec.seconds = r.wall_seconds;
          } else {
            AttackResult r = bsgs(params, kp.q);
            rec.group_ops = r.group_ops;
            rec.seconds = r.wall_seconds;
          }
        } catch (const Error& e) {
          rec.status = e.name();
          rec.group_ops = attack_scope.point_adds();
          rec.seconds = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
        }
        records.push_back(std::move(rec));
      }
    }
  }
  return records;
}

ScalingReport fit_scaling(const std::vector<BenchRecord>& records) {
  FitAccumulator walk_fit;
  std::vector<double> bsgs_x, bsgs_y;
  std::map<std::uint64_t, bool> walk_distinct_d;
  std::map<std::uint64_t, bool> bsgs_distinct_n;
  bool saw_walk = false, saw_bsgs = false;

  struct BitBucket {
    std::uint64_t count = 0;
    double walk_ops = 0.0;
    double keygen_ops = 0.0;
  };
  std::map<unsigned, BitBucket> per_bit;

  for (const auto& rec : records) {
    if (rec.status != "ok") continue;
    if (!rec.d.fits_u64() || !rec.n.fits_u64())
      throw CapExceeded("record values exceed the desk-scale fitting range");
    if (rec.method == AttackMethod::linear_walk) {
      saw_walk = true;
      walk_fit.add(static_cast<std::int64_t>(rec.d.to_u64()),
                   static_cast<std::int64_t>(rec.group_ops));
      walk_distinct_d[rec.d.to_u64()] = true;
      auto& bucket = per_bit[rec.bits];
      ++bucket.count;
      bucket.walk_ops += static_cast<double>(rec.group_ops);
      bucket.keygen_ops += static_cast<double>(rec.keygen_ops);
    } else {
      saw_bsgs = true;
      bsgs_x.push_back(std::sqrt(static_cast<double>(rec.n.to_u64())));
      bsgs_y.push_back(static_cast<double>(rec.group_ops));
      bsgs_distinct_n[rec.n.to_u64()] = true;
    }
  }

  bool fit_walk = saw_walk && walk_distinct_d.size() >= 2;
  bool fit_bsgs = saw_bsgs && bsgs_distinct_n.size() >= 2;
  if (!fit_walk && !fit_bsgs)
    throw InsufficientData(
        "need at least two distinct abscissae (d for the walk, n for bsgs) "
        "in some method to fit anything");

  ScalingReport report;

  if (fit_walk) {
    // slope = (N*Sxy - Sx*Sy) / (N*Sxx - Sx^2), all exact integers; the
    // divisions below are the only rounding, so an exact-contract data set
    // reports exactly slope 1, intercept -1.
    __int128 count = walk_fit.count;
    __int128 sxx = count * walk_fit.sum_xx - walk_fit.sum_x * walk_fit.sum_x;
    __int128 sxy = count * walk_fit.sum_xy - walk_fit.sum_x * walk_fit.sum_y;
    double slope = i128_to_double(sxy) / i128_to_double(sxx);
    __int128 intercept_num = walk_fit.sum_y * sxx - sxy * walk_fit.sum_x;
    __int128 intercept_den = count * sxx;
    double intercept = i128_to_double(intercept_num) / i128_to_double(intercept_den);

    double residual = 0.0;
    for (const auto& rec : records) {
      if (rec.status != "ok" || rec.method != AttackMethod::linear_walk)
        continue;
      double dev = static_cast<double>(rec.group_ops) -
                   (slope * static_cast<double>(rec.d.to_u64()) + intercept);
      residual += dev * dev;
    }
    report.linear_walk_vs_d =
        FitLine{slope, intercept, residual,
                static_cast<std::size_t>(walk_fit.count)};
  }

  if (fit_bsgs) {
    double count = static_cast<double>(bsgs_x.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < bsgs_x.size(); ++i) {
      sx += bsgs_x[i];
      sy += bsgs_y[i];
      sxx += bsgs_x[i] * bsgs_x[i];
      sxy += bsgs_x[i] * bsgs_y[i];
    }
    double denom = count * sxx - sx * sx;
    double slope = (count * sxy - sx * sy) / denom;
    double intercept = (sy - slope * sx) / count;
    double residual = 0.0;
    for (std::size_t i = 0; i < bsgs_x.size(); ++i) {
      double dev = bsgs_y[i] - (slope * bsgs_x[i] + intercept);
      residual += dev * dev;
    }
    report.bsgs_vs_sqrt_n = FitLine{slope, intercept, residual, bsgs_x.size()};
  }

  std::optional<unsigned> prev_bits;
  double prev_mean = 0.0;
  for (const auto& [bits, bucket] : per_bit) {
    BitClassStat stat;
    stat.bits = bits;
    stat.records = static_cast<std::size_t>(bucket.count);
    stat.mean_walk_ops = bucket.walk_ops / static_cast<double>(bucket.count);
    stat.mean_keygen_ops = bucket.keygen_ops / static_cast<double>(bucket.count);
    if (prev_bits && *prev_bits + 1 == bits && prev_mean > 0.0)
      stat.ratio_vs_prev = stat.mean_walk_ops / prev_mean;
    prev_bits = bits;
    prev_mean = stat.mean_walk_ops;
    report.per_bit.push_back(std::move(stat));
  }

  return report;
}

namespace {

ordered_json fit_to_json(const FitLine& fit) {
  ordered_json obj;
  obj["slope"] = fit.slope;
  obj["intercept"] = fit.intercept;
  obj["residual"] = fit.residual;
  obj["points"] = fit.points;
  return obj;
}

ordered_json record_to_json(const BenchRecord& rec) {
  ordered_json obj;
  obj["curve_id"] = rec.curve_id;
  obj["p"] = rec.p.to_decimal();
  obj["n"] = rec.n.to_decimal();
  obj["bits"] = rec.bits;
  obj["d"] = rec.d.to_decimal();
  obj["method"] = attack_method_name(rec.method);
  obj["group_ops"] = rec.group_ops;
  obj["keygen_ops"] = rec.keygen_ops;
  obj["seconds"] = rec.seconds;
  obj["status"] = rec.status;
  return obj;
}

ordered_json scaling_to_ordered(const ScalingReport& report) {
  ordered_json scaling;
  scaling["linear_walk_fit_vs_d"] =
      report.linear_walk_vs_d ? fit_to_json(*report.linear_walk_vs_d)
                              : ordered_json(nullptr);
  scaling["bsgs_fit_vs_sqrt_n"] = report.bsgs_vs_sqrt_n
                                      ? fit_to_json(*report.bsgs_vs_sqrt_n)
                                      : ordered_json(nullptr);
  scaling["per_bit"] = ordered_json::array();
  for (const auto& stat : report.per_bit) {
    ordered_json row;
    row["bits"] = stat.bits;
    row["records"] = stat.records;
    row["mean_walk_ops"] = stat.mean_walk_ops;
    row["mean_keygen_ops"] = stat.mean_keygen_ops;
    row["ratio_vs_prev"] =
        stat.ratio_vs_prev ? ordered_json(*stat.ratio_vs_prev)
                           : ordered_json(nullptr);
    scaling["per_bit"].push_back(std::move(row));
  }
  return scaling;
}

}  // namespace

std::string scaling_to_json(const ScalingReport& report) {
  return scaling_to_ordered(report).dump(2) + "\n";
}

std::string emit_report(const std::vector<BenchRecord>& records,
                        const ScalingReport& report, ReportFormat format) {
  if (format == ReportFormat::csv) {
    std::string out = "curve_id,p,n,bits,d,method,group_ops,keygen_ops,seconds\n";
    for (const auto& rec : records) {
      if (rec.status != "ok") continue;
      out += rec.curve_id;
      out += ',';
      out += rec.p.to_decimal();
      out += ',';
      out += rec.n.to_decimal();
      out += ',';
      out += std::to_string(rec.bits);
      out += ',';
      out += rec.d.to_decimal();
      out += ',';
      out += attack_method_name(rec.method);
      out += ',';
      out += std::to_string(rec.group_ops);
      out += ',';
      out += std::to_string(rec.keygen_ops);
      out += ',';
      out += format_seconds(rec.seconds);
      out += '\n';
    }
    return out;
  }

  ordered_json obj;
  obj["records"] = ordered_json::array();
  for (const auto& rec : records) obj["records"].push_back(record_to_json(rec));
  obj["scaling"] = scaling_to_ordered(report);
  return obj.dump(2) + "\n";
}

BenchConfig config_from_json(std::string_view text) {
  ordered_json obj = ordered_json::parse(text, nullptr, false);
  if (obj.is_discarded() || !obj.is_object())
    throw ParseError("malformed benchmark config");

  BenchConfig config;
  bool has_curves = obj.contains("curves");
  bool has_search = obj.contains("search");
  if (has_curves == has_search)
    throw ParseError("config needs exactly one of \"curves\" or \"search\"");

  if (has_curves) {
    if (!obj["curves"].is_array() || obj["curves"].empty())
      throw ParseError("\"curves\" must be a nonempty array");
    std::vector<CurveEntry> entries;
    for (const auto& entry : obj["curves"]) {
      DomainParams params = io::params_from_json(entry.dump());
      std::string id = entry.contains("id") && entry["id"].is_string()
                           ? entry["id"].get<std::string>()
                           : derived_id(params);
      entries.push_back(CurveEntry{std::move(id), std::move(params)});
    }
    config.suite = std::move(entries);
  } else {
    const auto& search = obj["search"];
    if (!search.is_object() || !search.contains("p_min") ||
        !search.contains("p_max") || !search["p_min"].is_string() ||
        !search["p_max"].is_string())
      throw ParseError(
          "\"search\" needs decimal string fields \"p_min\" and \"p_max\"");
    SearchRange range;
    range.p_min = BigUint::from_decimal(search["p_min"].get<std::string>()).to_u64();
    range.p_max = BigUint::from_decimal(search["p_max"].get<std::string>()).to_u64();
    range.prime_order = search.value("prime_order", true);
    config.suite = range;
  }

  if (!obj.contains("trials_per_curve") ||
      !obj["trials_per_curve"].is_number_unsigned())
    throw ParseError("missing \"trials_per_curve\"");
  config.trials_per_curve = obj["trials_per_curve"].get<std::uint64_t>();
  if (config.trials_per_curve < 1)
    throw ParseError("trials_per_curve must be at least 1");

  if (!obj.contains("seed") || !obj["seed"].is_number_unsigned())
    throw ParseError("missing \"seed\"");
  config.seed = obj["seed"].get<std::uint64_t>();

  if (!obj.contains("methods") || !obj["methods"].is_array() ||
      obj["methods"].empty())
    throw ParseError("\"methods\" must be a nonempty array");
  for (const auto& name : obj["methods"]) {
    if (!name.is_string()) throw ParseError("method names must be strings");
    config.methods.push_back(method_from_name(name.get<std::string>()));
  }

  if (obj.contains("op_cap")) {
    if (!obj["op_cap"].is_number_unsigned())
      throw ParseError("\"op_cap\" must be a nonnegative integer");
    config.op_cap = obj["op_cap"].get<std::uint64_t>();
  }
  return config;
}

std::vector<BenchRecord> records_from_csv(std::string_view text) {
  std::vector<BenchRecord> records;
  std::istringstream in{std::string(text)};
  std::string line;
  if (!std::getline(in, line))
    throw ParseError("empty CSV");
  if (line != "curve_id,p,n,bits,d,method,group_ops,keygen_ops,seconds")
    throw ParseError("unexpected CSV header: " + line);

  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::istringstream row(line);
    std::string cell;
    while (std::getline(row, cell, ',')) cells.push_back(cell);
    if (cells.size() != 9)
      throw ParseError("CSV row with " + std::to_string(cells.size()) +
                       " cells: " + line);
    try {
      BenchRecord rec;
      rec.curve_id = cells[0];
      rec.p = BigUint::from_decimal(cells[1]);
      rec.n = BigUint::from_decimal(cells[2]);
      rec.bits = static_cast<unsigned>(std::stoul(cells[3]));
      rec.d = BigUint::from_decimal(cells[4]);
      rec.method = method_from_name(cells[5]);
      rec.group_ops = std::stoull(cells[6]);
      rec.keygen_ops = std::stoull(cells[7]);
      rec.seconds = std::stod(cells[8]);
      records.push_back(std::move(rec));
    } catch (const std::logic_error&) {
      throw ParseError("malformed CSV row: " + line);
    }
  }
  return records;
}

}  // namespace ecdlp

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace svlab {

// Closed-form inference-cost model. All FLOP counts are exact integers;
// rounding happens only when rendering percentages.
struct FlopsConfig {
  long long n = 4096;   // model width
  long long L = 32;     // layers
  long long H = 32;     // attention heads
  long long P = 20;     // prompt length
  long long S = 100;    // steering-prompt length
  long long T = 148;    // context length at decode (defaults to P + R)
  long long I = 4;      // intervened prompt tokens
  long long R = 128;    // response length

  void validate() const;
};

enum class SteeringMethod { PromptSteering, AddFSSV, ClampFSSV, AddPrOSV, ClampPrOSV };
enum class Stage { Prefill, Decode };

std::string to_string(SteeringMethod m);
SteeringMethod steering_method_from_string(const std::string& s);

struct BaselineCosts {
  long long prefill = 0;           // L (24 n^2 P + 2 n P^2)
  long long decode_per_token = 0;  // L (24 n^2 + 4 n T + 3 H T)
};

BaselineCosts baseline_costs(const FlopsConfig& cfg);

struct Overhead {
  long long absolute = 0;
  double percent = 0.0;  // of the stage baseline
};

// Single intervened layer for SV methods; `full_variant` switches the SV
// numerators from the precomputed-constants minimum (n per token, 4n for
// clamp) to the full per-token cost (2n, 9n-1).
Overhead method_overhead(const FlopsConfig& cfg, SteeringMethod method, Stage stage,
                         bool full_variant = false);

struct Ratio {
  long long num = 0;
  long long den = 1;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
};

// Exact ratio of total generation overhead (prefill once + R decode steps)
// of method_a to method_b.
Ratio total_cost_ratio(const FlopsConfig& cfg, SteeringMethod method_a, SteeringMethod method_b,
                       bool full_variant = false);

// Round to `digits` significant figures (presentation and table comparison).
double round_sig(double value, int digits);
std::string format_sig(double value, int digits);
// Percent rendering: two decimals down to 0.01, two significant figures in
// scientific notation below that.
std::string format_percent(double value);

struct FlopsReport {
  BaselineCosts baseline;
  std::vector<std::pair<SteeringMethod, Overhead>> prefill;
  std::vector<std::pair<SteeringMethod, Overhead>> decode;
  Ratio prosv_over_fssv;  // AddPrOSV total vs AddFSSV total
};

FlopsReport build_flops_report(const FlopsConfig& cfg, bool full_variant = false);

std::string render_flops_table(const FlopsConfig& cfg, const FlopsReport& report);
void write_flops_csv(const FlopsConfig& cfg, const FlopsReport& report, const std::string& path);

}  // namespace svlab

// sfc3 command-line front end: generate orderings to files, verify files,
// compute locality metrics, and run traversal micro-benchmarks.
//
// Exit codes: 0 success, 1 I/O or parse failure, 2 invalid arguments,
// 3 verification failed.
#include <algorithm>
#include <chrono>
#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sfc3/sfc3.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIoParse = 1;
constexpr int kExitBadArgs = 2;
constexpr int kExitVerifyFailed = 3;

int exit_code_for(sfc3_status status) {
  switch (status) {
    case SFC3_OK: return kExitOk;
    case SFC3_ERROR_IO:
    case SFC3_ERROR_PARSE: return kExitIoParse;
    case SFC3_ERROR_VERIFICATION: return kExitVerifyFailed;
    default: return kExitBadArgs;
  }
}

bool parse_dims(const std::string& text, sfc3_dims& out) {
  uint64_t parts[3] = {0, 0, 0};
  size_t pos = 0;
  for (int i = 0; i < 3; ++i) {
    if (pos >= text.size() || !isdigit(static_cast<unsigned char>(text[pos]))) return false;
    uint64_t value = 0;
    while (pos < text.size() && isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + (text[pos] - '0');
      if (value > UINT32_MAX) return false;
      ++pos;
    }
    parts[i] = value;
    if (i < 2) {
      if (pos >= text.size() || text[pos] != 'x') return false;
      ++pos;
    }
  }
  if (pos != text.size()) return false;
  if (parts[0] == 0 || parts[1] == 0 || parts[2] == 0) return false;
  out = sfc3_dims{uint32_t(parts[0]), uint32_t(parts[1]), uint32_t(parts[2])};
  return true;
}

// Flags shared by every subcommand that names an ordering.
struct OrderArgs {
  std::string order;
  std::string block;
  std::string inter = "rowmajor";
  std::string intra = "rowmajor";
  bool allow_odd = false;
};

void add_order_flags(CLI::App* cmd, OrderArgs& args, bool multiple_orders,
                     std::vector<std::string>* orders) {
  if (multiple_orders) {
    cmd->add_option("--order", *orders, "ordering: rowmajor|morton|hilbert|hybrid (repeatable)")
        ->required();
  } else {
    cmd->add_option("--order", args.order, "ordering: rowmajor|morton|hilbert|hybrid")
        ->required();
  }
  cmd->add_option("--block", args.block, "hybrid tile extents, pxnxm");
  cmd->add_option("--inter", args.inter, "hybrid ordering across tiles (default rowmajor)");
  cmd->add_option("--intra", args.intra, "hybrid ordering within a tile (default rowmajor)");
  cmd->add_flag("--allow-odd", args.allow_odd,
                "permit odd extents for hilbert (steps longer than 1 may appear)");
}

bool build_spec(const std::string& order, const OrderArgs& args, sfc3_order_spec& out,
                std::string& error) {
  sfc3_order_kind kind;
  if (sfc3_order_kind_parse(order.c_str(), &kind) != SFC3_OK) {
    error = "unknown ordering '" + order + "' (expected rowmajor|morton|hilbert|hybrid)";
    return false;
  }
  out = sfc3_order_spec_init(kind);
  out.allow_odd = args.allow_odd ? 1 : 0;
  if (kind == SFC3_ORDER_HYBRID) {
    if (args.block.empty()) {
      error = "hybrid ordering requires --block pxnxm";
      return false;
    }
    if (!parse_dims(args.block, out.block)) {
      error = "bad --block '" + args.block + "' (expected pxnxm with positive extents)";
      return false;
    }
    if (sfc3_order_kind_parse(args.inter.c_str(), &out.inter) != SFC3_OK ||
        out.inter == SFC3_ORDER_HYBRID) {
      error = "bad --inter '" + args.inter + "' (must be a non-hybrid ordering)";
      return false;
    }
    if (sfc3_order_kind_parse(args.intra.c_str(), &out.intra) != SFC3_OK ||
        out.intra == SFC3_ORDER_HYBRID) {
      error = "bad --intra '" + args.intra + "' (must be a non-hybrid ordering)";
      return false;
    }
  }
  return true;
}

int fail(sfc3_status status, const std::string& context) {
  std::fprintf(stderr, "sfc3: %s: %s\n", context.c_str(), sfc3_status_message(status));
  return exit_code_for(status);
}

// Six-decimal-place rendering of num/den, rounded half up.
std::string rational_decimal(uint64_t num, uint64_t den) {
  const uint64_t whole = num / den;
  const uint64_t rem = num % den;
  const unsigned __int128 scaled = (unsigned __int128)(rem)*1000000u + den / 2;
  const uint64_t frac = uint64_t(scaled / den);
  char buf[64];
  if (frac >= 1000000) {
    std::snprintf(buf, sizeof buf, "%" PRIu64 ".000000", whole + 1);
  } else {
    std::snprintf(buf, sizeof buf, "%" PRIu64 ".%06" PRIu64, whole, frac);
  }
  return buf;
}

int run_gen(const sfc3_dims& dims, const OrderArgs& args, const std::string& format,
            const std::string& out_file) {
  sfc3_order_spec spec;
  std::string err;
  if (!build_spec(args.order, args, spec, err)) {
    std::fprintf(stderr, "sfc3: gen: %s\n", err.c_str());
    return kExitBadArgs;
  }

  sfc3_format fmt;
  if (format == "csv") fmt = SFC3_FORMAT_CSV;
  else if (format == "json") fmt = SFC3_FORMAT_JSON;
  else if (format == "bin") fmt = SFC3_FORMAT_BINARY;
  else {
    std::fprintf(stderr, "sfc3: gen: bad --format '%s' (expected csv|json|bin)\n",
                 format.c_str());
    return kExitBadArgs;
  }

  sfc3_path* path = nullptr;
  sfc3_status status = sfc3_path_generate(dims, &spec, &path);
  if (status != SFC3_OK) return fail(status, "gen: cannot build ordering");

  const std::string target = out_file.empty() ? "-" : out_file;
  status = sfc3_path_save(path, fmt, target.c_str());
  sfc3_path_free(path);
  if (status != SFC3_OK) return fail(status, "gen: cannot write " + target);
  return kExitOk;
}

int run_verify(const sfc3_dims& dims, const std::string& in_file) {
  sfc3_path* path = nullptr;
  sfc3_status status = sfc3_path_load(in_file.c_str(), &dims, &path);
  if (status != SFC3_OK) return fail(status, "verify: cannot read " + in_file);

  sfc3_verify_report report;
  status = sfc3_path_verify(path, &report);
  const uint64_t length = sfc3_path_length(path);
  sfc3_path_free(path);
  if (status != SFC3_OK) return fail(status, "verify");

  std::printf("dims: %ux%ux%u\n", dims.slabs, dims.rows, dims.cols);
  std::printf("cells: %" PRIu64 " of %" PRIu64 "\n", length, sfc3_dims_total(dims));
  std::printf("complete: %s\n", report.complete ? "yes" : "no");
  std::printf("in_bounds: %s\n", report.in_bounds ? "yes" : "no");
  std::printf("duplicates: %" PRIu64 "\n", report.duplicate_count);
  std::printf("missing: %" PRIu64 "\n", report.missing_count);
  std::printf("permutation: %s\n", report.is_permutation ? "yes" : "no");
  return report.is_permutation ? kExitOk : kExitVerifyFailed;
}

int run_metrics(const sfc3_dims& dims, const std::vector<std::string>& orders,
                const OrderArgs& args) {
  std::printf("order,mean_gap,mean_gap_decimal,max_gap,edges,step_histogram\n");
  for (const std::string& order : orders) {
    sfc3_order_spec spec;
    std::string err;
    if (!build_spec(order, args, spec, err)) {
      std::fprintf(stderr, "sfc3: metrics: %s\n", err.c_str());
      return kExitBadArgs;
    }

    sfc3_path* path = nullptr;
    sfc3_status status = sfc3_path_generate(dims, &spec, &path);
    if (status != SFC3_OK) return fail(status, "metrics: cannot build " + order);

    sfc3_locality_report locality;
    status = sfc3_path_locality(path, &locality);
    if (status != SFC3_OK) {
      sfc3_path_free(path);
      return fail(status, "metrics: " + order);
    }

    const uint64_t max_step = uint64_t(dims.slabs) + dims.rows + dims.cols + 1;
    std::vector<uint64_t> histogram(max_step, 0);
    status = sfc3_path_step_histogram(path, histogram.data(), histogram.size());
    const char* label = sfc3_path_order_label(path);

    std::string histogram_text;
    for (uint64_t len = 0; len < histogram.size(); ++len) {
      if (histogram[len] == 0) continue;
      if (!histogram_text.empty()) histogram_text += ';';
      histogram_text += std::to_string(len) + ":" + std::to_string(histogram[len]);
    }

    std::printf("%s,%" PRIu64 "/%" PRIu64 ",%s,%" PRIu64 ",%" PRIu64 ",%s\n", label,
                locality.mean_gap_num, locality.mean_gap_den,
                rational_decimal(locality.mean_gap_num, locality.mean_gap_den).c_str(),
                locality.max_gap, locality.edges_counted, histogram_text.c_str());
    sfc3_path_free(path);
    if (status != SFC3_OK) return fail(status, "metrics: " + order);
  }
  return kExitOk;
}

int run_bench(const sfc3_dims& dims, const OrderArgs& args, const std::string& kernel,
              uint32_t repeats) {
  if (kernel != "reduce" && kernel != "stencil") {
    std::fprintf(stderr, "sfc3: bench: bad --kernel '%s' (expected reduce|stencil)\n",
                 kernel.c_str());
    return kExitBadArgs;
  }
  sfc3_order_spec spec;
  std::string err;
  if (!build_spec(args.order, args, spec, err)) {
    std::fprintf(stderr, "sfc3: bench: %s\n", err.c_str());
    return kExitBadArgs;
  }

  sfc3_path* path = nullptr;
  sfc3_status status = sfc3_path_generate(dims, &spec, &path);
  if (status != SFC3_OK) return fail(status, "bench: cannot build ordering");

  const uint64_t total = sfc3_path_length(path);
  std::vector<sfc3_coord> cells;
  std::vector<double> data;
  std::vector<uint64_t> visit;
  try {
    cells.resize(total);
    data.resize(total);
    visit.resize(total);
  } catch (const std::bad_alloc&) {
    sfc3_path_free(path);
    return fail(SFC3_ERROR_NOMEM, "bench: volume does not fit in memory");
  }
  sfc3_path_cells(path, cells.data(), total);
  const char* label = sfc3_path_order_label(path);

  // Fixed pseudo-random fill, seed 42, bit-stable across platforms.
  std::mt19937_64 rng(42);
  for (double& v : data) {
    v = double(rng() >> 11) * 0x1.0p-53;
  }
  const uint64_t row_stride = dims.cols;
  const uint64_t slab_stride = uint64_t(dims.rows) * dims.cols;
  for (uint64_t k = 0; k < total; ++k) {
    visit[k] = (uint64_t(cells[k].slab) * dims.rows + cells[k].row) * dims.cols +
               cells[k].col;
  }

  std::printf("order=%s dims=%ux%ux%u kernel=%s repeats=%u cells=%" PRIu64 "\n", label,
              dims.slabs, dims.rows, dims.cols, kernel.c_str(), repeats, total);

  double checksum = 0.0;
  double best_seconds = 0.0;
  for (uint32_t rep = 0; rep < repeats; ++rep) {
    double acc = 0.0;
    const auto start = std::chrono::steady_clock::now();
    if (kernel == "reduce") {
      for (uint64_t k = 0; k < total; ++k) {
        acc += data[visit[k]];
      }
    } else {
      for (uint64_t k = 0; k < total; ++k) {
        const sfc3_coord c = cells[k];
        const uint64_t idx = visit[k];
        double sum = 0.0;
        if (c.col + 1 < dims.cols) sum += data[idx + 1];
        if (c.col > 0) sum += data[idx - 1];
        if (c.row + 1 < dims.rows) sum += data[idx + row_stride];
        if (c.row > 0) sum += data[idx - row_stride];
        if (c.slab + 1 < dims.slabs) sum += data[idx + slab_stride];
        if (c.slab > 0) sum += data[idx - slab_stride];
        acc += sum;
      }
    }
    const auto stop = std::chrono::steady_clock::now();
    const double seconds = std::chrono::duration<double>(stop - start).count();
    checksum = acc;
    if (rep == 0 || seconds < best_seconds) best_seconds = seconds;
    std::printf("repeat %u: %.9f s, %.6g cells/s\n", rep, seconds,
                seconds > 0 ? double(total) / seconds : 0.0);
  }
  std::printf("min: %.9f s, %.6g cells/s\n", best_seconds,
              best_seconds > 0 ? double(total) / best_seconds : 0.0);
  std::printf("checksum: %.17g\n", checksum);
  sfc3_path_free(path);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"space-filling-curve orderings for 3D data volumes"};
  app.require_subcommand(1);

  std::string dims_text;
  OrderArgs order_args;
  std::vector<std::string> metric_orders;
  std::string format = "csv";
  std::string out_file;
  std::string in_file;
  std::string kernel = "reduce";
  uint32_t repeats = 3;

  CLI::App* gen = app.add_subcommand("gen", "generate an ordering and write it");
  gen->add_option("--dims", dims_text, "volume extents, PxNxM")->required();
  add_order_flags(gen, order_args, false, nullptr);
  gen->add_option("--format", format, "output format: csv|json|bin (default csv)");
  gen->add_option("--out", out_file, "output file (default standard output)");

  CLI::App* verify = app.add_subcommand("verify", "check that a path file is a permutation");
  verify->add_option("--dims", dims_text, "volume extents, PxNxM")->required();
  verify->add_option("file", in_file, "path file (csv, json or bin)")->required();

  CLI::App* metrics = app.add_subcommand("metrics", "locality metrics for orderings");
  metrics->add_option("--dims", dims_text, "volume extents, PxNxM")->required();
  add_order_flags(metrics, order_args, true, &metric_orders);

  CLI::App* bench = app.add_subcommand("bench", "traversal micro-benchmark");
  bench->add_option("--dims", dims_text, "volume extents, PxNxM")->required();
  add_order_flags(bench, order_args, false, nullptr);
  bench->add_option("--kernel", kernel, "kernel: reduce|stencil (default reduce)");
  bench->add_option("--repeat", repeats, "number of timed traversals (default 3)")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadArgs;
  }

  sfc3_dims dims;
  if (!parse_dims(dims_text, dims)) {
    std::fprintf(stderr, "sfc3: bad --dims '%s' (expected PxNxM with positive extents)\n",
                 dims_text.c_str());
    return kExitBadArgs;
  }

  if (gen->parsed()) return run_gen(dims, order_args, format, out_file);
  if (verify->parsed()) return run_verify(dims, in_file);
  if (metrics->parsed()) return run_metrics(dims, metric_orders, order_args);
  if (bench->parsed()) return run_bench(dims, order_args, kernel, repeats);
  return kExitBadArgs;
}

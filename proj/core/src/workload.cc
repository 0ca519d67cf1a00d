/* Copyright 2026 The EcoRoute Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "ecoroute/workload.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "csv.h"
#include "ecoroute/error.h"

namespace ecoroute {

Workload::Workload(std::vector<Query> queries) : queries_(std::move(queries)) {
  for (std::size_t i = 0; i < queries_.size(); ++i) {
    if (queries_[i].tau_in == 0 && queries_[i].tau_out == 0) {
      throw Error(ErrorKind::kInvalidArgument,
                  "query " + std::to_string(i) + " has zero input and output tokens");
    }
  }
}

Workload parse_workload(std::istream& in) {
  detail::CsvReader reader(in, "tau_in,tau_out");
  std::vector<Query> queries;
  std::vector<std::string_view> fields;
  while (reader.next(fields)) {
    Query q;
    q.tau_in = detail::parse_count(fields[0], reader.line(), "tau_in");
    q.tau_out = detail::parse_count(fields[1], reader.line(), "tau_out");
    if (q.tau_in == 0 && q.tau_out == 0) {
      throw ParseError(reader.line(), "query (0,0) has no tokens and is rejected");
    }
    queries.push_back(q);
  }
  return Workload(std::move(queries));
}

void write_workload(std::ostream& out, const Workload& workload) {
  out << "tau_in,tau_out\n";
  for (const auto& q : workload) out << q.tau_in << ',' << q.tau_out << '\n';
}

namespace {

std::vector<double> parse_params(std::string_view body, std::size_t expected,
                                 std::string_view spec) {
  std::vector<double> params;
  for (auto field : detail::split_fields(body)) {
    try {
      params.push_back(detail::parse_real(field, 0, "distribution parameter"));
    } catch (const ParseError&) {
      throw Error(ErrorKind::kInvalidArgument,
                  "bad distribution parameter in '" + std::string(spec) + "'");
    }
  }
  if (params.size() != expected) {
    throw Error(ErrorKind::kInvalidArgument,
                "distribution '" + std::string(spec) + "' needs " +
                    std::to_string(expected) + " parameters");
  }
  return params;
}

std::uint32_t to_count(double v, std::string_view spec) {
  if (v < 0 || v != std::floor(v) || v > 4294967295.0) {
    throw Error(ErrorKind::kInvalidArgument,
                "token bound must be a nonnegative integer in '" +
                    std::string(spec) + "'");
  }
  return static_cast<std::uint32_t>(v);
}

void check(const UniformTokens& d) {
  if (d.lo > d.hi) {
    throw Error(ErrorKind::kInvalidArgument, "uniform distribution has lo > hi");
  }
  if (d.lo < 1) {
    throw Error(ErrorKind::kInvalidArgument, "uniform distribution needs lo >= 1");
  }
}

void check(const LognormalTokens& d) {
  if (d.cap < 1) {
    throw Error(ErrorKind::kInvalidArgument, "lognormal cap must be >= 1");
  }
  if (!(d.sigma >= 0) || !std::isfinite(d.mu)) {
    throw Error(ErrorKind::kInvalidArgument, "lognormal needs finite mu and sigma >= 0");
  }
}

}  // namespace

TokenDistribution parse_distribution(std::string_view spec) {
  const auto colon = spec.find(':');
  const auto kind = detail::trim(spec.substr(0, colon));
  const auto body = colon == std::string_view::npos ? std::string_view{}
                                                    : spec.substr(colon + 1);
  if (kind == "uniform") {
    const auto p = parse_params(body, 2, spec);
    UniformTokens d{to_count(p[0], spec), to_count(p[1], spec)};
    check(d);
    return d;
  }
  if (kind == "lognormal") {
    const auto p = parse_params(body, 3, spec);
    LognormalTokens d{p[0], p[1], to_count(p[2], spec)};
    check(d);
    return d;
  }
  throw Error(ErrorKind::kInvalidArgument,
              "unknown distribution '" + std::string(spec) +
                  "' (expected uniform:LO,HI or lognormal:MU,SIGMA,CAP)");
}

namespace {

struct Sampler {
  std::mt19937_64& rng;

  std::uint32_t operator()(const UniformTokens& d) const {
    std::uniform_int_distribution<std::uint32_t> dist(d.lo, d.hi);
    return dist(rng);
  }

  std::uint32_t operator()(const LognormalTokens& d) const {
    std::normal_distribution<double> normal(d.mu, d.sigma);
    const double draw = std::round(std::exp(normal(rng)));
    return static_cast<std::uint32_t>(std::clamp(draw, 1.0, double(d.cap)));
  }
};

}  // namespace

Workload generate_workload(std::size_t count, const TokenDistribution& in_dist,
                           const TokenDistribution& out_dist,
                           std::uint64_t seed) {
  if (count == 0) {
    throw Error(ErrorKind::kInvalidArgument, "workload count must be positive");
  }
  std::visit([](const auto& d) { check(d); }, in_dist);
  std::visit([](const auto& d) { check(d); }, out_dist);

  std::mt19937_64 rng(seed);
  Sampler sample{rng};
  std::vector<Query> queries(count);
  for (auto& q : queries) {
    q.tau_in = std::visit(sample, in_dist);
    q.tau_out = std::visit(sample, out_dist);
  }
  return Workload(std::move(queries));
}

}  // namespace ecoroute

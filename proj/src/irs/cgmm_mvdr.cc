/* Copyright 2026 The seldkit Authors. All Rights Reserved.

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

#include "seld/irs/cgmm_mvdr.h"

#include <cmath>
#include <limits>

#include <Eigen/Dense>

#include "seld/doa.h"
#include "seld/errors.h"
#include "seld/logging.h"
#include "seld/random.h"

namespace seld::irs {

namespace {

constexpr int kM = 4;
constexpr int kComponents = 2;
using Mat = Eigen::Matrix4cd;
using Vec = Eigen::Vector4cd;

struct Params {
  double alpha[kComponents];
  Mat r[kComponents];
  std::vector<double> phi[kComponents];
};

Mat NormalizeTrace(const Mat& r) { return r * (kM / r.trace().real()); }

Mat RandomCovariance(Rng& rng) {
  Mat a;
  for (int i = 0; i < kM; ++i) {
    for (int j = 0; j < kM; ++j) a(i, j) = {rng.Normal(), rng.Normal()};
  }
  return NormalizeTrace(a * a.adjoint() + 0.1 * Mat::Identity());
}

class BinModel {
 public:
  BinModel(const std::vector<Vec>& y, double shrinkage_frames, double phi_floor)
      : y_(y), t_(static_cast<int>(y.size())), beta_(shrinkage_frames), phi_floor_(phi_floor) {}

  void InitPhi(Params* p) const {
    for (int k = 0; k < kComponents; ++k) UpdatePhi(p->r[k], &p->phi[k]);
  }

  // Posteriors under `p`; returns the penalized log-likelihood.
  double EStep(const Params& p, std::vector<double> post[kComponents]) const {
    double ll = 0.0;
    Mat inv[kComponents];
    double logdet[kComponents];
    for (int k = 0; k < kComponents; ++k) {
      Eigen::LLT<Mat> llt(p.r[k]);
      inv[k] = llt.solve(Mat::Identity());
      logdet[k] = 2.0 * llt.matrixLLT().diagonal().real().array().log().sum();
      post[k].resize(t_);
      ll -= beta_ * (kM * std::log(inv[k].trace().real()) + logdet[k]);
    }
    for (int t = 0; t < t_; ++t) {
      double logp[kComponents];
      for (int k = 0; k < kComponents; ++k) {
        const double q = (y_[t].adjoint() * inv[k] * y_[t]).real()(0, 0);
        const double phi = p.phi[k][t];
        logp[k] = std::log(p.alpha[k]) - kM * std::log(kPi * phi) - logdet[k] - q / phi;
      }
      const double mx = std::max(logp[0], logp[1]);
      const double lse = mx + std::log(std::exp(logp[0] - mx) + std::exp(logp[1] - mx));
      ll += lse;
      for (int k = 0; k < kComponents; ++k) post[k][t] = std::exp(logp[k] - lse);
    }
    return ll;
  }

  // Returns false when a covariance is no longer numerically positive
  // definite. An empty component keeps iterating with alpha = 0.
  bool MStep(const std::vector<double> post[kComponents], Params* p) const {
    double mass[kComponents];
    for (int k = 0; k < kComponents; ++k) {
      mass[k] = 0.0;
      for (double v : post[k]) mass[k] += v;
      if (!(mass[k] + beta_ > 0.0)) return false;
    }
    for (int k = 0; k < kComponents; ++k) {
      const Mat old_inv = p->r[k].llt().solve(Mat::Identity());
      UpdatePhi(p->r[k], &p->phi[k]);
      // Majorizing the log tr(R^-1) term at the current R gives a closed form.
      Mat s = (beta_ * kM / old_inv.trace().real()) * Mat::Identity();
      for (int t = 0; t < t_; ++t) s.noalias() += (post[k][t] / p->phi[k][t]) * y_[t] * y_[t].adjoint();
      Mat r = s / (mass[k] + beta_);
      r = 0.5 * (r + r.adjoint().eval());
      // (R / c, phi * c) leaves the objective unchanged.
      const double c = r.trace().real() / kM;
      p->r[k] = r / c;
      for (double& v : p->phi[k]) v *= c;
      p->alpha[k] = mass[k] / t_;
      const Eigen::SelfAdjointEigenSolver<Mat> es(p->r[k], Eigen::EigenvaluesOnly);
      if (!(es.eigenvalues()[0] > 1e-12 * es.eigenvalues()[kM - 1])) return false;
    }
    return true;
  }

 private:
  void UpdatePhi(const Mat& r, std::vector<double>* phi) const {
    const Mat inv = r.llt().solve(Mat::Identity());
    phi->resize(t_);
    for (int t = 0; t < t_; ++t) {
      const double q = (y_[t].adjoint() * inv * y_[t]).real()(0, 0);
      (*phi)[t] = std::max(q / kM, phi_floor_);
    }
  }

  const std::vector<Vec>& y_;
  int t_;
  double beta_;
  double phi_floor_;
};

Vec PrincipalEigenvector(const Mat& r) {
  Eigen::SelfAdjointEigenSolver<Mat> es(r);
  return es.eigenvectors().col(kM - 1);
}

Mat WeightedCovariance(const std::vector<Vec>& y, const std::vector<double>& w) {
  Mat r = Mat::Zero();
  double mass = 0.0;
  for (size_t t = 0; t < y.size(); ++t) {
    r.noalias() += w[t] * y[t] * y[t].adjoint();
    mass += w[t];
  }
  return mass > 0.0 ? Mat(r / mass) : Mat::Zero();
}

}  // namespace

CgmmMvdrResult CgmmMvdr(const FoaClip& segment, const CgmmConfig& config) {
  if (config.iterations < 0) throw ValidationError("iterations must be >= 0");
  if (!(config.shrinkage_frames >= 0.0)) throw ValidationError("shrinkage_frames must be >= 0");
  const dsp::SpectralTensor spec = dsp::Stft(segment, config.stft);
  const int frames = spec.frames();
  if (frames < 10) {
    throw ValidationError("CGMM-MVDR needs at least 10 STFT frames, got " + std::to_string(frames));
  }
  const int bins = spec.bins();

  CgmmMvdrResult result;
  result.weights.resize(bins);
  result.steering.resize(bins);
  result.objective.resize(bins);

  std::optional<Vec> target_steer;
  if (config.target_direction) {
    const Eigen::Vector3d u = config.target_direction->normalized();
    target_steer = Vec(1.0, u.y(), u.z(), u.x()).normalized();
  }

  int energetic_bins = 0;
  std::vector<Vec> y(frames);
  for (int f = 0; f < bins; ++f) {
    for (int t = 0; t < frames; ++t) {
      for (int c = 0; c < kM; ++c) y[t][c] = spec.at(c, t, f);
    }
    const Mat r0 = WeightedCovariance(y, std::vector<double>(frames, 1.0));
    const double power = r0.trace().real() / kM;
    const Vec e0 = Vec::Unit(0);

    auto passthrough = [&] {
      Vec h = PrincipalEigenvector(r0);
      h = std::abs(h[0]) > 1e-12 ? Vec(h / h[0]) : e0;
      result.steering[f] = h;
      result.weights[f] = e0;
      ++result.degenerate_bins;
    };
    if (!(power > 0.0)) {
      passthrough();
      result.objective[f].assign(config.iterations + 1, 0.0);
      continue;
    }
    ++energetic_bins;

    Params p;
    if (config.random_init) {
      Rng rng = Rng::ForUnit(config.seed, static_cast<uint64_t>(f));
      const double a = rng.Uniform(0.2, 0.8);
      p.alpha[0] = a;
      p.alpha[1] = 1.0 - a;
      p.r[0] = RandomCovariance(rng);
      p.r[1] = RandomCovariance(rng);
    } else {
      // Component 0 starts on the target steering vector when the direction
      // is known, otherwise on the dominant eigenvector.
      const Vec v = target_steer ? *target_steer : PrincipalEigenvector(r0);
      p.alpha[0] = p.alpha[1] = 0.5;
      p.r[0] = NormalizeTrace(v * v.adjoint() + 1e-3 * Mat::Identity());
      p.r[1] = Mat::Identity();
    }
    const BinModel model(y, config.shrinkage_frames, 1e-10 * power);
    model.InitPhi(&p);

    std::vector<double> post[kComponents];
    std::vector<double>& trace = result.objective[f];
    for (int it = 0;; ++it) {
      trace.push_back(model.EStep(p, post));
      if (it == config.iterations) break;
      // Noise-free rank-1 data drives R towards singularity; the posteriors
      // of the last E-step are kept.
      if (!model.MStep(post, &p)) {
        trace.resize(config.iterations + 1, trace.back());
        break;
      }
    }
    bool degenerate = false;
    for (int k = 0; k < kComponents && !degenerate; ++k) {
      double mass = 0.0;
      for (double v : post[k]) mass += v;
      degenerate = mass < config.vanish_fraction * frames;
    }
    if (degenerate) {
      passthrough();
      continue;
    }

    Mat phi_k[kComponents];
    for (int k = 0; k < kComponents; ++k) phi_k[k] = WeightedCovariance(y, post[k]);
    int target = 0;
    if (target_steer) {
      double best = -1.0;
      for (int k = 0; k < kComponents; ++k) {
        const double match = std::abs(target_steer->dot(PrincipalEigenvector(phi_k[k])));
        if (match > best) {
          best = match;
          target = k;
        }
      }
    }
    Vec h = PrincipalEigenvector(phi_k[target]);
    h = std::abs(h[0]) > 1e-12 ? Vec(h / h[0]) : h;
    Mat rn = phi_k[1 - target];
    const double load = std::max(1e-6 * rn.trace().real() / kM, 1e-12 * power);
    rn += load * Mat::Identity();
    const Vec rinv_h = rn.ldlt().solve(h);
    const std::complex<double> denom = h.dot(rinv_h);  // h^H Rn^-1 h
    result.steering[f] = h;
    result.weights[f] = rinv_h / denom;
  }

  if (energetic_bins > 0 && result.degenerate_bins == bins) result.fallback = true;
  if (result.fallback) {
    Log().warn("stage=irs.cgmm msg=\"degenerate EM in every bin, W passthrough\" bins={}", bins);
  } else if (result.degenerate_bins > 0) {
    Log().debug("stage=irs.cgmm msg=\"degenerate EM, W passthrough\" bins={} of {}",
                result.degenerate_bins, bins);
  }
  if (energetic_bins == 0) result.fallback = true;
  if (result.fallback) {
    result.signal = segment.channel(kAcnW);
    return result;
  }
  result.signal = ApplyBeamformer(result.weights, segment, config.stft);
  return result;
}

Signal ApplyBeamformer(const std::vector<Eigen::Vector4cd>& weights, const FoaClip& clip,
                       const dsp::StftConfig& stft) {
  const dsp::SpectralTensor spec = dsp::Stft(clip, stft);
  if (static_cast<int>(weights.size()) != spec.bins()) {
    throw ValidationError("beamformer has " + std::to_string(weights.size()) + " bins, STFT " +
                          std::to_string(spec.bins()));
  }
  dsp::SpectralTensor out(1, spec.frames(), stft, clip.sample_rate(), clip.num_samples());
  for (int t = 0; t < spec.frames(); ++t) {
    for (int f = 0; f < spec.bins(); ++f) {
      std::complex<double> acc = 0.0;
      for (int c = 0; c < kM; ++c) acc += std::conj(weights[f][c]) * spec.at(c, t, f);
      out.at(0, t, f) = acc;
    }
  }
  return dsp::Istft(out)[0];
}

}  // namespace seld::irs

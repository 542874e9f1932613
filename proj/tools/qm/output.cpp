#include "qm/output.hpp"

#include <atomic>
#include <charconv>
#include <exception>
#include <fstream>
#include <iostream>
#include <mutex>
#include <thread>
#include <vector>

#include "qm/errors.hpp"

namespace qm::cli {

std::string format_number(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc()) throw NumericalFailure("number formatting failed");
  return std::string(buf, ptr);
}

void write_artifact(const RunConfig& config, const Artifact& artifact) {
  const std::string text =
      config.format == Format::json ? artifact.json.dump(2) + "\n" : artifact.csv;
  if (config.out.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(config.out, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write '" + config.out + "'");
  out << text;
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
  const std::size_t workers =
      std::min<std::size_t>(count, std::max(1u, std::thread::hardware_concurrency()));
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        next = count;
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace qm::cli

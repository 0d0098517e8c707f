#include "burgers/common.hpp"

namespace burgers {

unsigned& global_thread_count() {
  static unsigned count = 1;
  return count;
}

}  // namespace burgers

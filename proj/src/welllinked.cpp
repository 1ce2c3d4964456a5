#include "egt/common.hpp"

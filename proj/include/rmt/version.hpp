#pragma once

#define RMT_VERSION "0.1.0"

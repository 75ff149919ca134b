namespace gamma { int clamp_int(int v, int lo, int hi); }

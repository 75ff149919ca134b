namespace alpha { const int kMaxPath = 4096; }

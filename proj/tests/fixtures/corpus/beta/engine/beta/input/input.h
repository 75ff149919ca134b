namespace beta { struct Input { int device_count; }; }

# marker so packaged data ships in wheels

import { defineConfig } from 'vitest/config';

export default defineConfig({
  test: {
    include: ['tests/**/*.test.ts'],
    // the parity suite boots a real service process, give it headroom
    testTimeout: 20000,
    hookTimeout: 20000,
  },
});

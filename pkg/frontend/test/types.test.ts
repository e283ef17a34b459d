/** Wire-type helpers: labels and render text shared across panels. */

import { describe, expect, it } from 'vitest';

import {
  gammaRow,
  renderMsetEntry,
  renderToken,
  sameStep,
  stepLabel,
} from '../src/types.js';

describe('renderToken', () => {
  it('renders width-1 tokens bare', () => {
    expect(renderToken(['f1'])).toBe('f1');
  });

  it('renders wider tokens as compact tuples', () => {
    expect(renderToken(['a', 'b'])).toBe('(a,b)');
    expect(renderToken(['R2', 'D2'])).toBe('(R2,D2)');
  });
});

describe('renderMsetEntry', () => {
  it('renders plain occurrences', () => {
    expect(renderMsetEntry(['I_AB'])).toBe('I_AB');
  });

  it('marks unbounded counts with omega', () => {
    expect(renderMsetEntry({ token: ['eps'], count: 'omega' })).toBe('ω*eps');
  });
});

describe('stepLabel', () => {
  it('matches the CLI stepper text', () => {
    expect(stepLabel({ transition: 't2', binding: { I: 'I_AB' } })).toBe(
      't2 [I=I_AB]',
    );
  });

  it('sorts binding entries by variable', () => {
    expect(
      stepLabel({ transition: 't3', binding: { I: 'I_AB', D: 'f1' } }),
    ).toBe('t3 [D=f1; I=I_AB]');
  });

  it('omits brackets for an empty binding', () => {
    expect(stepLabel({ transition: 't5', binding: {} })).toBe('t5');
  });
});

describe('gammaRow', () => {
  it('matches the CLI connectivity text', () => {
    expect(gammaRow('I', ['I_AB'])).toBe('I -> {I_AB}');
    expect(gammaRow('R', ['R1', 'R2'])).toBe('R -> {R1, R2}');
  });
});

describe('sameStep', () => {
  it('compares transition and binding', () => {
    const a = { transition: 't1', binding: { D: 'f1' } };
    expect(sameStep(a, { transition: 't1', binding: { D: 'f1' } })).toBe(true);
    expect(sameStep(a, { transition: 't1', binding: { D: 'f2' } })).toBe(false);
    expect(sameStep(a, { transition: 't2', binding: { D: 'f1' } })).toBe(false);
  });
});

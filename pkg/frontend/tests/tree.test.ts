import { describe, expect, it } from 'vitest';

import { parseSceneDict, renderTree, SceneDictError, selectablePaths, type PrimNode } from '../src/tree.js';

const CAMERA_SCENE = JSON.stringify({
  '/World': {},
  '/World/Camera': { focalLength: 'NUM', horizontalAperture: 'NUM' },
});

function findNode(nodes: PrimNode[], path: string): PrimNode | null {
  for (const node of nodes) {
    if (node.path === path) return node;
    const hit = findNode(node.children, path);
    if (hit) return hit;
  }
  return null;
}

describe('parseSceneDict', () => {
  it('treats empty text as an empty scene', () => {
    expect(parseSceneDict('')).toEqual([]);
    expect(parseSceneDict('  \n')).toEqual([]);
    expect(parseSceneDict('{}')).toEqual([]);
  });

  it('builds a nested tree with a selectable camera node', () => {
    const roots = parseSceneDict(CAMERA_SCENE);
    expect(roots).toHaveLength(1);
    const world = roots[0];
    expect(world.name).toBe('World');
    expect(world.selectable).toBe(true);
    expect(world.children).toHaveLength(1);
    const camera = world.children[0];
    expect(camera.path).toBe('/World/Camera');
    expect(camera.selectable).toBe(true);
    expect(camera.attrs).toContainEqual(['focalLength', 'NUM']);
  });

  it('creates unselectable group nodes for ancestor paths that are not prims', () => {
    const roots = parseSceneDict('{"/A/B/C": {"x": "NUM"}}');
    const a = findNode(roots, '/A');
    const b = findNode(roots, '/A/B');
    const c = findNode(roots, '/A/B/C');
    expect(a?.selectable).toBe(false);
    expect(b?.selectable).toBe(false);
    expect(c?.selectable).toBe(true);
    expect(selectablePaths(roots)).toEqual(['/A/B/C']);
  });

  it('keeps dictionary order for selectable paths', () => {
    const roots = parseSceneDict(
      '{"/World": {}, "/World/Terrain": {}, "/World/Camera": {}, "/World/Snake_000": {}}',
    );
    expect(selectablePaths(roots)).toEqual([
      '/World',
      '/World/Terrain',
      '/World/Camera',
      '/World/Snake_000',
    ]);
  });

  it('reports malformed JSON with the parser message verbatim', () => {
    let expected = '';
    try {
      JSON.parse('not a scene');
    } catch (err) {
      expected = (err as Error).message;
    }
    expect(() => parseSceneDict('not a scene')).toThrowError(SceneDictError);
    try {
      parseSceneDict('not a scene');
    } catch (err) {
      expect((err as SceneDictError).message).toBe(expected);
    }
  });

  it('rejects non-object documents and non-object prims', () => {
    expect(() => parseSceneDict('[1, 2]')).toThrowError(/JSON object/);
    expect(() => parseSceneDict('{"/World": 3}')).toThrowError(/expected an attribute object/);
    expect(() => parseSceneDict('{"": {}}')).toThrowError(/invalid prim path/);
  });
});

describe('renderTree', () => {
  it('renders checkboxes only on selectable nodes and shows attribute lines', () => {
    const host = document.createElement('div');
    const roots = parseSceneDict(CAMERA_SCENE);
    renderTree(roots, host, { selected: new Set(), onToggle: () => {} });

    const boxes = host.querySelectorAll<HTMLInputElement>('input[type=checkbox]');
    expect([...boxes].map((b) => b.dataset.path)).toEqual(['/World', '/World/Camera']);
    expect(host.textContent).toContain('focalLength: NUM');
  });

  it('reflects the selected set and reports toggles', () => {
    const host = document.createElement('div');
    const roots = parseSceneDict(CAMERA_SCENE);
    const toggles: [string, boolean][] = [];
    renderTree(roots, host, {
      selected: new Set(['/World/Camera']),
      onToggle: (path, checked) => toggles.push([path, checked]),
    });

    const camera = host.querySelector<HTMLInputElement>('input[data-path="/World/Camera"]');
    const world = host.querySelector<HTMLInputElement>('input[data-path="/World"]');
    expect(camera?.checked).toBe(true);
    expect(world?.checked).toBe(false);

    world!.checked = true;
    world!.dispatchEvent(new Event('change'));
    camera!.checked = false;
    camera!.dispatchEvent(new Event('change'));
    expect(toggles).toEqual([
      ['/World', true],
      ['/World/Camera', false],
    ]);
  });

  it('renders a placeholder for an empty scene', () => {
    const host = document.createElement('div');
    renderTree([], host, { selected: new Set(), onToggle: () => {} });
    expect(host.textContent).toContain('No scene yet.');
    expect(host.querySelectorAll('input')).toHaveLength(0);
  });
});

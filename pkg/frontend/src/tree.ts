/**
 * Scene outline: parses the condensed scene dictionary (a JSON object
 * mapping prim paths to attribute summaries) into a tree of selectable
 * nodes and renders it with checkboxes for object selection.
 */

export interface PrimNode {
  name: string;
  path: string;
  /** True when the path is a prim of the scene (a key of the dictionary). */
  selectable: boolean;
  attrs: [string, string][];
  children: PrimNode[];
}

export class SceneDictError extends Error {
  constructor(message: string) {
    super(message);
    this.name = 'SceneDictError';
  }
}

/** Parse dictionary text into root nodes; empty text means an empty scene. */
export function parseSceneDict(text: string): PrimNode[] {
  const trimmed = text.trim();
  if (trimmed === '') return [];
  let raw: unknown;
  try {
    raw = JSON.parse(trimmed);
  } catch (err) {
    throw new SceneDictError(err instanceof Error ? err.message : String(err));
  }
  if (raw === null || typeof raw !== 'object' || Array.isArray(raw)) {
    throw new SceneDictError('scene dictionary must be a JSON object');
  }

  const roots: PrimNode[] = [];
  const byPath = new Map<string, PrimNode>();

  const nodeFor = (path: string, name: string, parent: PrimNode | null): PrimNode => {
    const known = byPath.get(path);
    if (known) return known;
    const node: PrimNode = { name, path, selectable: false, attrs: [], children: [] };
    byPath.set(path, node);
    (parent ? parent.children : roots).push(node);
    return node;
  };

  for (const [path, value] of Object.entries(raw)) {
    const segments = path.split('/').filter((s) => s !== '');
    if (segments.length === 0) {
      throw new SceneDictError(`invalid prim path: ${JSON.stringify(path)}`);
    }
    if (value === null || typeof value !== 'object' || Array.isArray(value)) {
      throw new SceneDictError(`prim ${path}: expected an attribute object`);
    }
    let parent: PrimNode | null = null;
    let walked = '';
    for (const segment of segments) {
      walked += `/${segment}`;
      parent = nodeFor(walked, segment, parent);
    }
    const node = parent as PrimNode;
    node.selectable = true;
    node.attrs = Object.entries(value).map(([k, v]) => [k, String(v)]);
  }
  return roots;
}

/** Every selectable prim path, in dictionary order. */
export function selectablePaths(nodes: PrimNode[]): string[] {
  const out: string[] = [];
  const walk = (node: PrimNode) => {
    if (node.selectable) out.push(node.path);
    node.children.forEach(walk);
  };
  nodes.forEach(walk);
  return out;
}

export interface TreeRenderOptions {
  selected: Set<string>;
  onToggle: (path: string, checked: boolean) => void;
}

/** Render the outline into the container, wiring checkbox toggles. */
export function renderTree(nodes: PrimNode[], container: HTMLElement, options: TreeRenderOptions): void {
  container.textContent = '';
  if (nodes.length === 0) {
    const empty = document.createElement('p');
    empty.className = 'empty';
    empty.textContent = 'No scene yet.';
    container.appendChild(empty);
    return;
  }
  container.appendChild(renderLevel(nodes, options));
}

function renderLevel(nodes: PrimNode[], options: TreeRenderOptions): HTMLUListElement {
  const list = document.createElement('ul');
  for (const node of nodes) {
    const item = document.createElement('li');
    item.dataset.path = node.path;

    const label = document.createElement('label');
    if (node.selectable) {
      const box = document.createElement('input');
      box.type = 'checkbox';
      box.dataset.path = node.path;
      box.checked = options.selected.has(node.path);
      box.addEventListener('change', () => options.onToggle(node.path, box.checked));
      label.appendChild(box);
      label.appendChild(document.createTextNode(' '));
    }
    const name = document.createElement('span');
    name.className = 'prim-name';
    name.textContent = node.name;
    label.appendChild(name);
    item.appendChild(label);

    if (node.attrs.length > 0) {
      const attrs = document.createElement('ul');
      attrs.className = 'prim-attrs';
      for (const [key, value] of node.attrs) {
        const line = document.createElement('li');
        line.textContent = `${key}: ${value}`;
        attrs.appendChild(line);
      }
      item.appendChild(attrs);
    }
    if (node.children.length > 0) {
      item.appendChild(renderLevel(node.children, options));
    }
    list.appendChild(item);
  }
  return list;
}

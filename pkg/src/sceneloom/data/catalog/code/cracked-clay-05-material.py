"""Cracked Clay 05 Material generator (Materials)."""

PARAMS = {
    "size": 0.35,
    "detail": 4,
    "roughness": 0.173,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Cracked Clay 05 Material"
    for key, value in params.items():
        node[key] = value
    return node

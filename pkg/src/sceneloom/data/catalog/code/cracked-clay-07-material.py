"""Cracked Clay 07 Material generator (Materials)."""

PARAMS = {
    "size": 2.618,
    "detail": 4,
    "roughness": 0.856,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Cracked Clay 07 Material"
    for key, value in params.items():
        node[key] = value
    return node

"""Cracked Clay 09 Material generator (Materials)."""

PARAMS = {
    "size": 0.509,
    "detail": 4,
    "roughness": 0.54,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Cracked Clay 09 Material"
    for key, value in params.items():
        node[key] = value
    return node

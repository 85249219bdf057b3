"""River Silt 07 Material generator (Materials)."""

PARAMS = {
    "size": 0.902,
    "detail": 4,
    "roughness": 0.559,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "River Silt 07 Material"
    for key, value in params.items():
        node[key] = value
    return node
